#pragma once

// Finite spectral measures on the unit sphere: a list of (direction, weight)
// atoms, or the isotropic flag.  Loadable from JSON:
//   {"dim": n, "isotropic": bool, "atoms": [{"direction": [...], "weight": w}]}

#include <string>
#include <vector>

namespace gstable {

struct SpectralAtom {
    std::vector<double> direction;  // unit vector, normalized on load
    double weight = 0.0;            // >= 0
};

class SpectralMeasure {
public:
    // Discrete measure; directions are normalized, weights must be >= 0
    // with positive total mass.
    SpectralMeasure(int dim, std::vector<SpectralAtom> atoms);

    // Isotropic measure (atoms ignored).
    static SpectralMeasure isotropic(int dim);

    static SpectralMeasure from_json(const std::string& text);
    std::string to_json() const;

    int dim() const { return dim_; }
    bool is_isotropic() const { return isotropic_; }
    const std::vector<SpectralAtom>& atoms() const { return atoms_; }

private:
    SpectralMeasure() = default;
    int dim_ = 1;
    bool isotropic_ = false;
    std::vector<SpectralAtom> atoms_;
};

}  // namespace gstable
