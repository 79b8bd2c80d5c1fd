#ifndef GTB_STRUCTURES_HPP
#define GTB_STRUCTURES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gtb/genmetric.hpp"

namespace gtb {

// Most specific class first; an endomorphism may satisfy several.
enum class EndoClass { NotGacs, WeakGacs, StrongGacs, Product, ParaComplex };

struct EndoClassification {
    bool weak_gacs = false;    // J^2 = -Id (block system)
    bool strong_gacs = false;  // weak + pairing skew-adjoint (K = -H^*, alpha/beta antisymmetric)
    bool product = false;      // P^2 = Id + pairing self-adjoint (K = H^*, alpha/beta symmetric)
    bool paracomplex = false;  // product with +-1 eigenbundles of equal generic rank
    EndoClass primary = EndoClass::NotGacs;
};

EndoClassification classify_endo(const EndoE& j);

// Pairing adjoint: <J^adj u, v> = <u, J v>.
EndoE pairing_adjoint(const EndoE& j);

// 2n x 2n column matrix of the endomorphism, for rank computations over the
// (complexified) fraction field.
FieldMatrix endo_matrix(const EndoE& j);

// Extensions X^{+-} = X +- alpha^{-1}X - alpha^{-1}H X for a product
// structure with invertible alpha, and the induced connection
// nabla^+_X Y = pi(1/2 (Id + P)([X^-, Y^+]_C)).
GenSection para_extend_plus(const EndoE& p, const VectorField& x);
GenSection para_extend_minus(const EndoE& p, const VectorField& x);
AffineConnection para_connection(const EndoE& p);

// rho = alpha^{-1} H read back as a 2-form (it is antisymmetric for any
// orthogonal product structure); the induced torsion satisfies
// T(X,Y) = alpha(i_X i_Y d rho).
KForm para_two_form(const EndoE& p);
Tensor3 para_torsion_formula(const EndoE& p);

struct ParaIntegReport {
    bool alpha_parallel = false;
    bool h_parallel = false;
    bool drho_zero = false;
    bool pairing_hypothesis = false;  // <nabla~_u v, w> = <nabla~_{Pu} v, Pw> on the frame
    bool nabla_nijenhuis_zero = false;
    std::optional<Witness> nabla_witness;
    bool courant_nijenhuis_zero = false;  // on the para eigenframe
    std::optional<Witness> courant_witness;
};

ParaIntegReport para_integrability(const EndoE& p);

// Maximal isotropic subbundle V_i = v(D) + Ann(D) built from an isotropic
// frame D; returns the m = dim M spanning sections (k extensions X_i^+ and
// m - k annihilator 1-forms).
std::vector<GenSection> build_vi(const GeneralizedMetric& gm,
                                 const std::vector<VectorField>& frame);

// Signature (p, q) by congruence diagonalization; nullopt when a pivot is
// a nonconstant rational function (sign undecidable at the generic point).
std::optional<std::pair<std::size_t, std::size_t>> metric_signature(const MetricTensor& g);

struct JgIntegReport {
    bool frame_involutive = false;  // D closed under the Lie bracket (rank test)
    std::optional<Witness> involutivity_witness;
    bool metric_integrable = false;  // Courant report of gm
    bool vi_involutive = false;      // [s,t]_C in span(V_i) for all basis pairs
    std::optional<Witness> vi_witness;
};

JgIntegReport jg_integrability(const GeneralizedMetric& gm, const std::vector<VectorField>& frame);

// Weak almost Hermitian data (g, A) with A = g^{-1} b nonsingular and
// g-skew; Q = -A^2 is g-self-adjoint. Construction validates all of it.
class WeakHermitian {
public:
    WeakHermitian(MetricTensor g, FieldMatrix a);

    std::size_t dim() const { return g_.dim(); }
    const MetricTensor& g() const { return g_; }
    const FieldMatrix& a() const { return a_; }
    const FieldMatrix& q() const { return q_; }

private:
    MetricTensor g_;
    FieldMatrix a_;
    FieldMatrix q_;
};

// A from a generalized metric with nondegenerate b: g(AX,Y) = b(X,Y).
// Throws DimensionOdd for odd charts and DegenerateB when det b = 0.
WeakHermitian weak_from_metric(const GeneralizedMetric& gm);

enum class Lemma7Reading { Primary, Alternate };

struct TorsionCondReport {
    bool a_condition = false;  // T(AX, Y) = T(X, AY)
    std::optional<Witness> a_witness;
    bool q_condition = false;  // T(QX, Y) = T(X, QY) = Q T(X, Y)
    std::optional<Witness> q_witness;
    bool b_parallel = false;             // hypothesis of the A-condition lemma
    bool b_identity = false;             // the displayed 6-term b-db identity
    bool q_hypothesis = false;           // db(QX,Y,Z) = db(X,Y,QZ)
};

TorsionCondReport torsion_conditions(const GeneralizedMetric& gm, const WeakHermitian& wh,
                                     const AffineConnection& conn,
                                     Lemma7Reading reading = Lemma7Reading::Primary);

// Polarized defect S(X,Y) = (nabla^LC_X A)Y + (nabla^LC_Y A)X; the structure
// is weak nearly Kahler iff S = 0 and weak Kahler iff nabla^LC A = 0.
Tensor3 nearly_kahler_defect(const WeakHermitian& wh, const AffineConnection& lc);
bool weak_kahler(const WeakHermitian& wh, const AffineConnection& lc);

struct HermitianReport {
    bool strong = false;            // J classifies strong
    bool commutes = false;          // GJ = JG blockwise
    FieldMatrix j_plus;             // induced J+ on TM
    FieldMatrix j_minus;            // induced J- on TM
    bool j_pm_square = false;       // J+- squared = -Id
    bool extension_identity = false;  // (J+- X)^{+-} = J X^{+-}
    bool b_parallel = false;
    // Parallelism statements; the equivalence below is asserted only when
    // nabla^+ b = 0.
    bool j_blocks_parallel = false;
    bool j_pm_parallel = false;
    bool parallel_equivalence = false;
};

// Throws NotCompatible (with the offending block in the message) when G and
// J do not commute.
HermitianReport hermitian_suite(const GeneralizedMetric& gm, const EndoE& j);

// The pair J1, J2 built from Hermitian structures (g, J+-) conjugated by
// the b-transform; both are strong, they commute, and -J1 J2 reproduces the
// blocks of the generalized metric (g, b).
std::pair<EndoE, EndoE> gualtieri_pair(const MetricTensor& g, const KForm& b,
                                       const FieldMatrix& j_plus, const FieldMatrix& j_minus);

// Conjugation of an endomorphism by the graph-map transform of b (the same
// orientation the generalized-metric blocks use), so that a (g,0)-compatible
// structure becomes (g,b)-compatible.
EndoE kahler_conjugate_endo(const KForm& b, const EndoE& j);

struct KahlerReport {
    // hypotheses
    bool db_zero = false;
    bool b_parallel = false;
    bool j_pm_parallel = false;
    // conclusions, each evaluated independently
    bool courant_nijenhuis_j_zero = false;
    std::optional<Witness> courant_j_witness;
    bool courant_nijenhuis_gj_zero = false;
    bool nabla_nijenhuis_g_zero = false;
    bool nabla_nijenhuis_j_zero = false;
    std::optional<Witness> nabla_j_witness;
    bool nabla_nijenhuis_gj_zero = false;
    bool parallel_g = false;
    bool parallel_j = false;
    bool parallel_gj = false;
};

KahlerReport kahler_report(const GeneralizedMetric& gm, const EndoE& j);

}  // namespace gtb

#endif
