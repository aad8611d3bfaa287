#include "cmsdisc/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cmsdisc {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

MeasureLoadResult load_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measure file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty measure file: " + path);
    const std::string header = trim(line);
    MeasureDomain domain;
    if (header == "position,weight")
        domain = MeasureDomain::Line;
    else if (header == "theta,weight")
        domain = MeasureDomain::Circle;
    else
        throw std::runtime_error("bad measure header in " + path + ": " + header);

    std::vector<Atom> atoms;
    double raw_sum = 0.0;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trim(line);
        if (row.empty()) continue;
        std::istringstream ss(row);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected two fields");
        try {
            const double pos = std::stod(a);
            const double w = std::stod(b);
            atoms.push_back({pos, w});
            raw_sum += w;
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number");
        }
    }
    if (atoms.empty()) throw std::runtime_error("no atoms in measure file: " + path);
    return {DiscreteMeasure(domain, std::move(atoms)),
            std::abs(raw_sum - 1.0) > 1e-6};
}

void save_measure(const DiscreteMeasure& mu, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write measure file: " + path);
    out << (mu.domain() == MeasureDomain::Line ? "position,weight" : "theta,weight") << "\n";
    out << std::setprecision(17);
    for (const auto& a : mu.atoms()) out << a.position << "," << a.weight << "\n";
}

}  // namespace cmsdisc
