#ifndef GTB_CONNECTIONS_HPP
#define GTB_CONNECTIONS_HPP

#include "gtb/affine.hpp"
#include "gtb/courant.hpp"

namespace gtb {

// Generalized connection induced by an affine connection:
//   nabla~_{X+xi}(Y+eta) = nabla_X Y + nabla_X eta.
// Satisfies the Leibniz rule along pi and compatibility with the pairing
// by construction.
class GeneralizedConnection {
public:
    explicit GeneralizedConnection(AffineConnection base) : base_(std::move(base)) {}

    std::size_t dim() const { return base_.dim(); }
    const AffineConnection& base() const { return base_; }

    GenSection apply(const GenSection& u, const GenSection& v) const {
        return GenSection(cov_deriv(base_, u.vec(), v.vec()), cov_deriv(base_, u.vec(), v.form()));
    }

private:
    AffineConnection base_;
};

// Torsion of a generalized connection with respect to the Courant bracket:
//   T(v,w,u) = <nabla~_v w - nabla~_w v - [v,w]_C, u>
//              + 1/2 (<nabla~_u v, w> - <nabla~_u w, v>).
ScalarField gen_torsion_courant(const GeneralizedConnection& gc, const GenSection& v,
                                const GenSection& w, const GenSection& u);

// The same torsion through the Dorfman bracket:
//   T(v,w,u) = <nabla~_v w - nabla~_w v - [v,w]_D, u> + <nabla~_u v, w>.
ScalarField gen_torsion_courant_dorfman_form(const GeneralizedConnection& gc, const GenSection& v,
                                             const GenSection& w, const GenSection& u);

// Torsion with respect to the connection-induced bracket:
//   T(v,w) = nabla~_v w - nabla~_w v - [v,w]_nabla.
GenSection gen_torsion_nabla(const GeneralizedConnection& gc, const AffineConnection& conn,
                             const GenSection& v, const GenSection& w);

// Left minus right side of the coincidence criterion for the two torsions:
//   1/2 (eta(T(X,Z) + nabla_Z X) - xi(T(Y,Z) + nabla_Z Y) + Z(xi(Y)))
//     = <nabla~_{Z+zeta}(X+xi), Y+eta>
// with v = X+xi, w = Y+eta, u = Z+zeta. Zero for all inputs exactly when
// the torsions coincide.
ScalarField torsion_equality_defect(const GeneralizedConnection& gc, const AffineConnection& conn,
                                    const GenSection& v, const GenSection& w, const GenSection& u);

}  // namespace gtb

#endif
