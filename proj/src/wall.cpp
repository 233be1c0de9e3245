#include "p2quot/wall.hpp"

#include <algorithm>
#include <stdexcept>

#include "p2quot/errors.hpp"
#include "p2quot/p1.hpp"

namespace p2quot {

namespace {

void check_wall_size(int n, Subset K) {
    const int k = K.size();
    if (k < 2 || k > n - 3)
        throw std::invalid_argument("wall subsets need 2 <= |K| <= n-3");
}

}  // namespace

int side_fiber_dim(int n, Subset K, int side) {
    check_wall_size(n, K);
    if (side != 1 && side != -1)
        throw std::invalid_argument("side must be +1 or -1");
    return side > 0 ? n - K.size() - 3 : 2 * K.size() - 3;
}

int epsilon(int n, Subset K) {
    check_wall_size(n, K);
    const int k3 = 3 * K.size();
    return k3 < n ? 1 : k3 > n ? -1 : 0;
}

Poly q_poly(int n, Subset K) {
    const int eps = epsilon(n, K);
    if (eps == 0) return Poly::zero();
    const int lo = side_fiber_dim(n, K, -eps);  // smaller fiber dimension
    const int hi = side_fiber_dim(n, K, eps);
    Poly q;
    for (int e = 2 * lo + 2; e <= 2 * hi; e += 2) q += Poly::monomial(e);
    return q;
}

WallCrossing analyze_wall(const Polarization& wall_point, Subset K, int max_n) {
    const int n = wall_point.size();
    check_wall_size(n, K);

    const ConePosition pos = cone_position(wall_point, max_n);
    if (pos.tag != ConePosition::Tag::Wall ||
        std::find(pos.walls.begin(), pos.walls.end(), K) == pos.walls.end())
        throw std::invalid_argument("weights do not lie on the requested wall");
    if (pos.walls.size() != 1)
        throw std::invalid_argument("non-generic wall point");

    WallCrossing wc{coprime_rescale(wall_point),
                    K,
                    n,
                    side_fiber_dim(n, K, +1),
                    side_fiber_dim(n, K, -1),
                    Poly::zero()};

    std::vector<Rat> reduced;
    for (int i = 1; i <= n; ++i)
        if (!K.contains(i)) reduced.push_back(wc.wall_point.weight(i));
    wc.z_poly = p1_ip(Polarization(std::move(reduced)), max_n);
    return wc;
}

Poly crossing_delta(const Polarization& wall_point, Subset K, int max_n) {
    const WallCrossing wc = analyze_wall(wall_point, K, max_n);
    const int eps = epsilon(wc.n, K);
    if (eps == 0) return Poly::zero();
    return (q_poly(wc.n, K) * wc.z_poly).scaled(eps);
}

}  // namespace p2quot
