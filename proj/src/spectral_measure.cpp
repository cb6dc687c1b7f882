#include "gstable/spectral_measure.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace gstable {

namespace {
void normalize_atom(SpectralAtom& atom, int dim) {
    if (static_cast<int>(atom.direction.size()) != dim) {
        throw std::invalid_argument("SpectralMeasure: atom direction has wrong dimension");
    }
    double norm2 = 0.0;
    for (double v : atom.direction) norm2 += v * v;
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("SpectralMeasure: atom direction cannot be normalized");
    }
    for (double& v : atom.direction) v /= norm;
    if (!(atom.weight >= 0.0)) {
        throw std::invalid_argument("SpectralMeasure: atom weight must be nonnegative");
    }
}
}  // namespace

SpectralMeasure::SpectralMeasure(int dim, std::vector<SpectralAtom> atoms)
    : dim_(dim), isotropic_(false), atoms_(std::move(atoms)) {
    if (dim < 1) throw std::invalid_argument("SpectralMeasure: dim must be >= 1");
    double total = 0.0;
    for (auto& a : atoms_) {
        normalize_atom(a, dim);
        total += a.weight;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("SpectralMeasure: total weight must be positive");
    }
}

SpectralMeasure SpectralMeasure::isotropic(int dim) {
    if (dim < 1) throw std::invalid_argument("SpectralMeasure: dim must be >= 1");
    SpectralMeasure m;
    m.dim_ = dim;
    m.isotropic_ = true;
    return m;
}

SpectralMeasure SpectralMeasure::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int dim = j.at("dim").get<int>();
    if (j.value("isotropic", false)) return isotropic(dim);
    std::vector<SpectralAtom> atoms;
    for (const auto& ja : j.at("atoms")) {
        SpectralAtom a;
        a.direction = ja.at("direction").get<std::vector<double>>();
        a.weight = ja.at("weight").get<double>();
        atoms.push_back(std::move(a));
    }
    return SpectralMeasure(dim, std::move(atoms));
}

std::string SpectralMeasure::to_json() const {
    nlohmann::json j;
    j["dim"] = dim_;
    j["isotropic"] = isotropic_;
    j["atoms"] = nlohmann::json::array();
    for (const auto& a : atoms_) {
        j["atoms"].push_back({{"direction", a.direction}, {"weight", a.weight}});
    }
    return j.dump(2);
}

}  // namespace gstable
