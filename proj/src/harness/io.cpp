#include "starorder/harness/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starorder/errors.hpp"

namespace starorder::harness {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ContractError(std::string("malformed document: ") + e.what());
    }
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ContractError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ContractError(std::string("field '") + key + "' has the wrong type");
    }
}

json matrix_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return {{"dim", m.rows()}, {"entries", entries}};
}

ComplexMatrix matrix_from(const json& j) {
    const auto n = field<long long>(j, "dim");
    const auto entries = field<std::vector<std::vector<double>>>(j, "entries");
    if (n < 1) {
        throw ContractError("matrix dim must be positive");
    }
    if (static_cast<long long>(entries.size()) != n * n) {
        throw ContractError("matrix needs dim*dim entries");
    }
    ComplexMatrix m(n, n);
    for (long long k = 0; k < n * n; ++k) {
        const auto& e = entries[static_cast<std::size_t>(k)];
        if (e.size() != 2) {
            throw ContractError("matrix entries are [re, im] pairs");
        }
        m(k / n, k % n) = Complex{e[0], e[1]};
    }
    require_well_formed(m);
    return m;
}

json model_json(const SpectralModel& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms()) {
        atoms.push_back({{"value", a.value}, {"label", a.label}, {"multiplicity", a.multiplicity}});
    }
    json bands = json::array();
    for (const auto& b : m.bands()) {
        bands.push_back({{"lo", b.lo}, {"hi", b.hi}, {"label", b.label}});
    }
    return {{"atoms", atoms}, {"bands", bands}};
}

SpectralModel model_from(const json& j) {
    std::vector<Atom> atoms;
    std::vector<Band> bands;
    if (!j.is_object()) {
        throw ContractError("model must be an object");
    }
    for (const auto& a : j.value("atoms", json::array())) {
        atoms.push_back({field<double>(a, "value"), field<std::string>(a, "label"),
                         a.contains("multiplicity") ? field<int>(a, "multiplicity") : 1});
    }
    for (const auto& b : j.value("bands", json::array())) {
        bands.push_back({field<double>(b, "lo"), field<double>(b, "hi"), field<std::string>(b, "label")});
    }
    return SpectralModel(std::move(atoms), std::move(bands));
}

json map_json(const ScalarMap& h) {
    json j = {{"kind", to_string(h.kind())}};
    switch (h.kind()) {
    case ScalarMap::Kind::identity:
        break;
    case ScalarMap::Kind::power:
        j["exponent"] = h.exponent();
        break;
    case ScalarMap::Kind::scale:
        j["factor"] = {h.factor().real(), h.factor().imag()};
        break;
    case ScalarMap::Kind::phase_power:
        j["exponent"] = h.exponent();
        j["phase"] = h.phase();
        break;
    case ScalarMap::Kind::piecewise_linear: {
        json table = json::array();
        for (const auto& [x, y] : h.breakpoints()) {
            table.push_back({x, y});
        }
        j["breakpoints"] = table;
        break;
    }
    case ScalarMap::Kind::composite:
        j["outer"] = map_json(h.outer());
        j["inner"] = map_json(h.inner());
        j["inner_scale"] = h.inner_scale();
        j["conj_outer"] = h.conj_outer();
        j["conj_phase"] = h.conj_phase();
        break;
    }
    return j;
}

ScalarMap map_from(const json& j) {
    const auto kind = field<std::string>(j, "kind");
    if (kind == "identity") {
        return ScalarMap::identity();
    }
    if (kind == "power") {
        return ScalarMap::power(field<double>(j, "exponent"));
    }
    if (kind == "scale") {
        const auto c = field<std::vector<double>>(j, "factor");
        if (c.size() != 2) {
            throw ContractError("scale factor is a [re, im] pair");
        }
        return ScalarMap::scale({c[0], c[1]});
    }
    if (kind == "phase-power") {
        return ScalarMap::phase_power(field<double>(j, "exponent"), field<double>(j, "phase"));
    }
    if (kind == "piecewise-linear") {
        std::vector<std::pair<double, double>> table;
        for (const auto& p : field<std::vector<std::vector<double>>>(j, "breakpoints")) {
            if (p.size() != 2) {
                throw ContractError("breakpoints are [x, y] pairs");
            }
            table.emplace_back(p[0], p[1]);
        }
        return ScalarMap::piecewise_linear(std::move(table));
    }
    if (kind == "composite") {
        return ScalarMap::composite(map_from(field<json>(j, "outer")), map_from(field<json>(j, "inner")),
                                    field<double>(j, "inner_scale"), field<bool>(j, "conj_outer"),
                                    field<bool>(j, "conj_phase"));
    }
    throw ContractError("unknown scalar map kind '" + kind + "'");
}

}  // namespace

ComplexMatrix parse_matrix(const std::string& text) { return matrix_from(parse_json(text)); }

std::string dump_matrix(const ComplexMatrix& m) { return matrix_json(m).dump() + "\n"; }

SpectralModel parse_model(const std::string& text) { return model_from(parse_json(text)); }

std::string dump_model(const SpectralModel& m) { return model_json(m).dump() + "\n"; }

ScalarMap parse_scalar_map(const std::string& text) { return map_from(parse_json(text)); }

std::string dump_scalar_map(const ScalarMap& h) { return map_json(h).dump() + "\n"; }

AutomorphismSpec parse_spec(const std::string& text, const ToleranceConfig& tol) {
    const json j = parse_json(text);
    const auto variant_name = j.is_object() ? j.value("variant", std::string("direct")) : "";
    Variant variant;
    if (variant_name == "direct") {
        variant = Variant::direct;
    } else if (variant_name == "adjoint") {
        variant = Variant::adjoint;
    } else {
        throw ContractError("variant must be 'direct' or 'adjoint'");
    }
    const bool anti = j.contains("antiunitary") && field<bool>(j, "antiunitary");
    ComplexMatrix s;
    ComplexMatrix t;
    if (j.contains("S") || j.contains("T")) {
        s = matrix_from(field<json>(j, "S"));
        t = matrix_from(field<json>(j, "T"));
    } else {
        const auto n = field<long long>(j, "dim");
        if (n < 1) {
            throw ContractError("dim must be positive");
        }
        s = t = ComplexMatrix::Identity(n, n);
    }
    const ScalarMap h = j.contains("h") ? map_from(j.at("h")) : ScalarMap::identity();
    return AutomorphismSpec(field<double>(j, "alpha"), {s, anti}, {t, anti}, h, variant, tol);
}

std::string dump_spec(const AutomorphismSpec& s) {
    const json j = {{"alpha", s.alpha()},
                    {"variant", to_string(s.variant())},
                    {"antiunitary", s.antiunitary()},
                    {"S", matrix_json(s.s().matrix)},
                    {"T", matrix_json(s.t().matrix)},
                    {"h", map_json(s.h())}};
    return j.dump() + "\n";
}

std::string dump_decomposition(const PenroseDecomposition& pd) {
    json terms = json::array();
    for (const auto& t : pd.terms) {
        terms.push_back({{"value", t.value}, {"isometry", matrix_json(t.isometry)}});
    }
    return json({{"dim", pd.dim}, {"terms", terms}, {"warnings", pd.warnings}}).dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ContractError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw ContractError("cannot write '" + path + "'");
    }
}

}  // namespace starorder::harness
