#pragma once

// Catmull-Rom bicubic sampling of half-plane fields at arbitrary points.
// Boundary policy: across the axis the stencil is filled by parity reflection
// (node at -r(i) mirrors node at r(i), with an optional sign flip); beyond the
// outer boundaries values are taken as zero (fields are assumed to decay).

#include <cmath>

#include "axi/grid.hpp"

namespace axi {

enum class AxisParity { Even, Odd };

namespace detail {

// Catmull-Rom basis written in mirror-symmetric form: the weight vector at
// local coordinate u is exactly the reverse of the vector at 1-u.
template <typename Scalar>
inline Scalar cr_edge(Scalar t) {
    const Scalar omt = Scalar(1) - t;
    return (Scalar(-0.5) * t) * (omt * omt);
}

template <typename Scalar>
inline Scalar cr_center(Scalar t) {
    return Scalar(1) + (t * t) * (Scalar(1.5) * t - Scalar(2.5));
}

}  // namespace detail

template <typename Scalar = double>
class BicubicSampler {
  public:
    BicubicSampler(const ScalarField2D<Scalar>& f, AxisParity parity)
        : f_(&f), parity_(parity) {}

    Scalar operator()(Scalar r, Scalar z) const {
        const Grid2D<Scalar>& g = f_->grid;
        Scalar sign = Scalar(1);
        if (r < Scalar(0)) {
            r = -r;
            if (parity_ == AxisParity::Odd) sign = -sign;
        }
        // Fractional index relative to the first node at dr/2.
        const Scalar fi = r / g.dr - Scalar(0.5);
        const Scalar fj = (z + g.z_max) / g.dz - Scalar(0.5);
        const int i0 = static_cast<int>(std::floor(fi));
        const int j0 = static_cast<int>(std::floor(fj));
        const Scalar ui = fi - Scalar(i0);
        const Scalar uj = fj - Scalar(j0);

        const Scalar wi[4] = {detail::cr_edge(ui), detail::cr_center(ui),
                              detail::cr_center(Scalar(1) - ui), detail::cr_edge(Scalar(1) - ui)};
        const Scalar wj[4] = {detail::cr_edge(uj), detail::cr_center(uj),
                              detail::cr_center(Scalar(1) - uj), detail::cr_edge(Scalar(1) - uj)};

        Scalar acc = Scalar(0);
        for (int a = 0; a < 4; ++a) {
            const int i = i0 - 1 + a;
            Scalar row = Scalar(0);
            for (int b = 0; b < 4; ++b) {
                const int j = j0 - 1 + b;
                row += wj[b] * value_at(i, j);
            }
            acc += wi[a] * row;
        }
        return sign * acc;
    }

  private:
    Scalar value_at(int i, int j) const {
        const Grid2D<Scalar>& g = f_->grid;
        Scalar sign = Scalar(1);
        if (i < 0) {
            i = -1 - i;  // staggered reflection about r = 0
            if (parity_ == AxisParity::Odd) sign = -sign;
        }
        if (i >= g.nr || j < 0 || j >= g.nz) return Scalar(0);
        return sign * f_->values(i, j);
    }

    const ScalarField2D<Scalar>* f_;
    AxisParity parity_;
};

}  // namespace axi
