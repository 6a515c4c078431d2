#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiltwall/model.hpp"
#include "tiltwall/numclass.hpp"

namespace tiltwall {

/// Locus nu(v) = nu(w) in coordinates (beta, t = alpha^2), stored as
/// L(beta, t) = (u0 + u1 beta) t + (q0 + q1 beta + q2 beta^2) = 0.
/// Cross-multiplying the slope equality kills the beta^3 and t*beta terms
/// identically; construction asserts both cancellations.
struct WallConic {
    Rational u0, u1;
    Rational q0, q1, q2;

    bool is_zero() const {
        return u0.is_zero() && u1.is_zero() && q0.is_zero() && q1.is_zero() && q2.is_zero();
    }
    Rational t_coeff(const Rational& beta) const { return u0 + u1 * beta; }
    Rational const_part(const Rational& beta) const { return q0 + q1 * beta + q2 * beta * beta; }
    Rational eval(const Rational& beta, const Rational& t) const {
        return t_coeff(beta) * t + const_part(beta);
    }

    friend bool operator==(const WallConic& a, const WallConic& b) {
        return a.u0 == b.u0 && a.u1 == b.u1 && a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2;
    }
};

/// Compact box in the (beta, t = alpha^2) half-plane.
struct Window {
    Rational beta_lo, beta_hi;
    Rational t_lo, t_hi;

    /// Validates beta_lo <= beta_hi and 0 < t_lo <= t_hi.
    static Window make(Rational beta_lo, Rational beta_hi, Rational t_lo, Rational t_hi);
};

WallConic wall_curve(const NumClass& v, const NumClass& w);

/// Exact membership test; requires t > 0.
bool on_wall(const NumClass& v, const NumClass& w, const Rational& beta, const Rational& t);

struct TSolution {
    enum class Kind { value, none, identically_satisfied };
    Kind kind;
    Rational t;  // meaningful only when kind == value
};

/// Solves L(beta, t) = 0 for t at fixed beta. No positivity filter on the
/// result; callers discard t <= 0 themselves.
TSolution solve_t(const WallConic& wc, const Rational& beta);

struct WindowHit {
    bool hit = false;
    /// A rational point of the conic inside the window, when one exists and
    /// the search finds it. Tangencies at irrational points leave it empty.
    std::optional<std::pair<Rational, Rational>> witness;
};

/// Exact decision for conic-meets-window, by sign analysis of the two
/// quadratics -Q - bound * U on subintervals where U has constant sign.
WindowHit wall_window_hit(const WallConic& wc, const Window& win);
bool wall_intersects_window(const WallConic& wc, const Window& win);

/// Scale-invariant key: proportional coefficient tuples map to the same
/// string. Used to identify walls that share a locus.
std::string conic_canonical_key(const WallConic& wc);

/// Numerical wall candidate: the destabilizer class (d3 plays no role in the
/// locus) together with its conic and the intersection witness.
struct PseudoWall {
    Rational r, c, d2;
    WallConic conic;
    std::optional<std::pair<Rational, Rational>> witness;
};

/// Enumerates candidate destabilizer triples w = (r, c, d2) with |r| bounded
/// by max_rank, twisted ch1 between 0 and that of vE somewhere in the window,
/// both discriminants nonnegative, lattice integrality, and conic actually
/// meeting the window. Deduplicated by conic proportionality (keeping the
/// lexicographically least triple) and sorted by (r, c, d2). Output is
/// identical for every thread count.
std::vector<PseudoWall> enumerate_pseudo_walls(const NumClass& vE, const Window& win,
                                               int max_rank, const VarietyModel& model,
                                               int threads = 1);

/// Parameter region 0 < t < 1/2, s > (7t - 2)/(6(t + 1)).
bool region_p3(const Rational& s, const Rational& t);

/// Closed variant (7t - 2)/(6(t + 1)) < s <= 1/6 with 0 < t < 1/2.
bool region_p3_lemma(const Rational& s, const Rational& t);

/// omega^3 < 1/(12 sqrt(3)) on the degree-2 model, squared to 1728 alpha^6 < 1.
bool region_quadric(const Rational& alpha);
bool region_quadric_tsq(const Rational& tsq);

/// omega^3 < 3 sqrt(3) on the degree-1 model, squared to alpha^6 < 27.
bool region_p3_intro(const Rational& alpha);
bool region_p3_intro_tsq(const Rational& tsq);

}  // namespace tiltwall
