#pragma once

#include <string>

namespace tiltwall {

/// A Picard-rank-1 threefold reduced to its numerics: the degree d = H^3 of
/// the ample generator and the denominator bounds of the Chern lattice
/// (lam2 * ch2-coefficient and lam3 * ch3-coefficient are integral).
struct VarietyModel {
    std::string name;
    long d = 1;
    long lam2 = 1;
    long lam3 = 1;

    static VarietyModel p3() { return {"p3", 1, 2, 6}; }
    static VarietyModel quadric() { return {"quadric", 2, 2, 6}; }
    static VarietyModel hypersurface(long degree);
    static VarietyModel custom(std::string name, long d, long lam2, long lam3);
};

}  // namespace tiltwall
