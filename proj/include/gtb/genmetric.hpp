#ifndef GTB_GENMETRIC_HPP
#define GTB_GENMETRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gtb/connections.hpp"
#include "gtb/courant.hpp"

namespace gtb {

// Witness of a nonzero value: which inputs produced it and what came out.
struct Witness {
    std::vector<std::string> inputs;
    std::string value;
};

// Generalized metric given by a pair (g, b): the +1 eigenbundle of the block
// endomorphism G = e^{-b} G_g e^{b} is the graph {X + gX + i_X b}. The block
// identities G^2 = Id and <Gu,Gv> = <u,v> are verified exactly at
// construction. g may be pseudo-Riemannian; positivity statements then hold
// only in the Riemannian case.
class GeneralizedMetric {
public:
    GeneralizedMetric(MetricTensor g, KForm b);

    std::size_t dim() const { return g_.dim(); }
    const MetricTensor& g() const { return g_; }
    const KForm& b() const { return b_; }
    // Matrix of the graph map X -> bX entering V^{+-} and the blocks; this
    // is the component matrix b(d_i, d_j), not the interior-product map.
    const FieldMatrix& b_operator() const { return b_op_; }
    const EndoE& blocks() const { return blocks_; }

private:
    MetricTensor g_;
    KForm b_;
    FieldMatrix b_op_;
    EndoE blocks_;
};

// X^+ = X + gX + bX and X^- = X - gX + bX.
GenSection extend_plus(const GeneralizedMetric& gm, const VectorField& x);
GenSection extend_minus(const GeneralizedMetric& gm, const VectorField& x);

// Eigenprojections 1/2 (Id +- G).
GenSection project_plus(const GeneralizedMetric& gm, const GenSection& u);
GenSection project_minus(const GeneralizedMetric& gm, const GenSection& u);

// Connection induced on TM by the metric: nabla^+_X Y = pi(([X^-, Y^+]_C)_+).
// Metric-compatible with torsion 3-tensor -db; nabla^- has torsion +db.
AffineConnection induced_connection_plus(const GeneralizedMetric& gm);
AffineConnection induced_connection_minus(const GeneralizedMetric& gm);
// Same construction through the H-twisted Courant bracket (torsion -db - H).
AffineConnection induced_connection_plus_twisted(const GeneralizedMetric& gm, const KForm& h);

// The 2n coordinate sections d_1..d_n, dx_1..dx_n.
std::vector<GenSection> coordinate_frame(std::size_t dim);
std::string coordinate_frame_name(std::size_t dim, std::size_t index);

// Courant-integrability diagnostics. The verdict is frame-based: the
// Nijenhuis operator is evaluated on all coordinate section pairs. The
// x_k-scaled probes test function-linearity, which genuinely fails for
// involutions under the Courant bracket; the defect has the closed form
//   N(fu,v) - f N(u,v) = 2 (<u,v> df - <Gu,v> G(df)),
// and the report checks the probes against that formula instead of
// assuming tensoriality.
struct CourantIntegReport {
    bool nijenhuis_vanishes = false;
    std::optional<Witness> nijenhuis_witness;
    bool probes_tensorial = false;
    bool probe_defect_formula_ok = false;
    std::optional<Witness> probe_witness;
    // Sufficient criterion beta(Z) = g(nabla^+_Z X, Y) - g(nabla^+_Z Y, X).
    bool beta_criterion_zero = false;
    std::optional<Witness> beta_witness;
    // Self-check of the involutivity identity
    //   (i_X d(gY) - i_Y d(gX))(Z) = g([X,Y],Z) + g(nabla_Z X, Y) - g(nabla_Z Y, X).
    bool involutivity_identity_ok = false;
    // N_C(v,w) = 1/2 (N_D(v,w) - N_D(w,v)) on the frame.
    bool dorfman_symmetry_ok = false;
};

CourantIntegReport courant_integrability_report(const GeneralizedMetric& gm);

// Integrability with respect to the bracket induced by nabla^+; the closed
// form of the frame Nijenhuis values is T(g^{-1}xi, Y) + T(X, g^{-1}eta),
// which vanishes exactly when db = 0.
struct NablaIntegReport {
    bool integrable = false;
    std::optional<Witness> nijenhuis_witness;
    bool db_zero = false;
    // (N vanishes on the frame) iff (the closed form vanishes on the frame).
    bool closed_form_consistent = false;
    std::optional<Witness> closed_form_witness;
};

NablaIntegReport nabla_integrability_check(const GeneralizedMetric& gm);

// nabla^+ b = 0 iff the induced generalized connection kills every block
// of G; both sides are computed and their agreement asserted on each call.
struct ParallelReport {
    bool b_parallel = false;
    bool blocks_parallel = false;
    bool equivalent = false;  // always expected true
};

ParallelReport parallel_G_check(const GeneralizedMetric& gm);

}  // namespace gtb

#endif
