#include "tiltwall/model.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

VarietyModel VarietyModel::hypersurface(long degree) {
    if (degree < 1) throw Error(Errc::precondition_violated, "hypersurface degree must be >= 1");
    return {"hypersurface-" + std::to_string(degree), degree, 2, 6};
}

VarietyModel VarietyModel::custom(std::string name, long d, long lam2, long lam3) {
    if (d < 1 || lam2 < 1 || lam3 < 1)
        throw Error(Errc::precondition_violated, "model requires d, lam2, lam3 >= 1");
    return {std::move(name), d, lam2, lam3};
}

}  // namespace tiltwall
