#include "lioufock/json_io.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace lioufock::io {

json encode(Cplx z) { return json::array({z.real(), z.imag()}); }

json encode(const CVec& v) {
    json out = json::array();
    for (const Cplx& z : v) out.push_back(encode(z));
    return out;
}

json encode(const CMat& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(encode(m(r, c)));
        out.push_back(row);
    }
    return out;
}

Cplx decode_cplx(const json& j, const std::string& where) {
    if (j.is_number()) return Cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Cplx(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument(where + " must be a number or an [re, im] pair");
}

CVec decode_cvec(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + " must be an array");
    CVec out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(decode_cplx(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

CMat decode_cmat(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(where + " must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    CMat out;
    for (int r = 0; r < rows; ++r) {
        const CVec row = decode_cvec(j[r], where + "[" + std::to_string(r) + "]");
        if (cols < 0) {
            cols = static_cast<int>(row.size());
            out = CMat(rows, cols);
        } else if (static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument(where + " rows must all have the same length");
        }
        for (int c = 0; c < cols; ++c) out(r, c) = row[c];
    }
    return out;
}

lindblad::QuadraticLindbladModel parse_model(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("model must be a JSON object");

    if (!j.contains("statistics") || !j["statistics"].is_string())
        throw std::invalid_argument("statistics must be \"fermionic\" or \"bosonic\"");
    const std::string stats_s = j["statistics"].get<std::string>();
    Statistics stats;
    if (stats_s == "fermionic")
        stats = Statistics::Fermionic;
    else if (stats_s == "bosonic")
        stats = Statistics::Bosonic;
    else
        throw std::invalid_argument("statistics must be \"fermionic\" or \"bosonic\"");

    if (!j.contains("n_modes") || !j["n_modes"].is_number_integer())
        throw std::invalid_argument("n_modes must be an integer");
    const int n = j["n_modes"].get<int>();

    int cutoff = 0;
    if (stats == Statistics::Bosonic) {
        if (!j.contains("cutoff") || !j["cutoff"].is_number_integer())
            throw std::invalid_argument("cutoff must be an integer for bosonic statistics");
        cutoff = j["cutoff"].get<int>();
    } else if (j.contains("cutoff")) {
        throw std::invalid_argument("cutoff is only meaningful for bosonic statistics");
    }

    lindblad::QuadraticLindbladModel model{ModeSystem(stats, n, cutoff), CMat(), CMat(), {}};

    if (!j.contains("H_hop")) throw std::invalid_argument("H_hop is required");
    model.h_hop = decode_cmat(j["H_hop"], "H_hop");
    if (j.contains("H_pair") && !j["H_pair"].is_null())
        model.h_pair = decode_cmat(j["H_pair"], "H_pair");

    if (j.contains("lindblad_ops")) {
        if (!j["lindblad_ops"].is_array())
            throw std::invalid_argument("lindblad_ops must be an array");
        for (size_t mu = 0; mu < j["lindblad_ops"].size(); ++mu) {
            const json& b = j["lindblad_ops"][mu];
            const std::string tag = "lindblad_ops[" + std::to_string(mu) + "]";
            if (!b.is_object() || !b.contains("u") || !b.contains("v"))
                throw std::invalid_argument(tag + " must be an object with u and v arrays");
            model.baths.push_back({decode_cvec(b["u"], tag + ".u"), decode_cvec(b["v"], tag + ".v")});
        }
    }

    lindblad::validate(model);
    return model;
}

json model_to_json(const lindblad::QuadraticLindbladModel& model) {
    json j;
    j["statistics"] = to_string(model.sys.stats);
    j["n_modes"] = model.sys.n_modes;
    if (model.sys.stats == Statistics::Bosonic) j["cutoff"] = model.sys.cutoff;
    j["H_hop"] = encode(model.h_hop);
    if (!model.h_pair.empty()) j["H_pair"] = encode(model.h_pair);
    j["lindblad_ops"] = json::array();
    for (const auto& b : model.baths)
        j["lindblad_ops"].push_back(json{{"u", encode(b.u)}, {"v", encode(b.v)}});
    return j;
}

std::string input_hash(const json& j) {
    const std::string dump = j.dump(); // nlohmann object keys are already sorted
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace lioufock::io
