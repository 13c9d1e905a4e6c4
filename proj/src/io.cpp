#include "prym/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace prym {

nlohmann::ordered_json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<int64_t>(v.convert_to<long long>());
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected an integer (number or decimal string)");
}

nlohmann::ordered_json grid_to_json(const IntMat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMat grid_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("expected an array of rows");
    int r = static_cast<int>(j.size());
    int c = r == 0 ? 0 : static_cast<int>(j.at(0).size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != c)
            throw InputError("ragged entry rows");
        for (int k = 0; k < c; ++k) m(i, k) = int_from_json(row.at(k));
    }
    return m;
}

nlohmann::ordered_json matrix_to_json(const IntMat& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = grid_to_json(m);
    return j;
}

IntMat matrix_from_json(const nlohmann::json& j) {
    if (j.is_array()) return grid_from_json(j);
    if (!j.contains("entries")) throw InputError("matrix object requires an \"entries\" field");
    IntMat m = grid_from_json(j.at("entries"));
    if (j.contains("rows") && j.at("rows").get<int>() != m.rows())
        throw InputError("matrix \"rows\" field disagrees with entries");
    if (j.contains("cols") && j.at("cols").get<int>() != m.cols())
        throw InputError("matrix \"cols\" field disagrees with entries");
    return m;
}

nlohmann::ordered_json gmodule_to_json(const FreeGModule& m) {
    nlohmann::ordered_json j;
    j["rank"] = m.rank;
    j["sigma"] = grid_to_json(m.sigma);
    return j;
}

FreeGModule gmodule_from_json(const nlohmann::json& j) {
    if (!j.contains("sigma")) throw InputError("G-module requires a \"sigma\" field");
    IntMat s = grid_from_json(j.at("sigma"));
    int rank = j.contains("rank") ? j.at("rank").get<int>() : s.rows();
    return FreeGModule(rank, std::move(s));
}

nlohmann::ordered_json lattice_file_to_json(const LatticeFile& f) {
    nlohmann::ordered_json j;
    j["gram"] = grid_to_json(f.lattice.base.gram);
    j["sigma"] = grid_to_json(f.lattice.sigma);
    if (!f.sublattices.empty()) {
        nlohmann::ordered_json subs;
        for (const auto& [name, basis] : f.sublattices)
            subs[name] = grid_to_json(basis.transpose()); // vectors as rows on disk
        j["sublattices"] = subs;
    }
    return j;
}

LatticeFile lattice_file_from_json(const nlohmann::json& j) {
    if (!j.contains("gram")) throw InputError("lattice file requires a \"gram\" field");
    IntMat gram = grid_from_json(j.at("gram"));
    IntMat sigma = j.contains("sigma") ? grid_from_json(j.at("sigma"))
                                       : IntMat::identity(gram.rows());
    LatticeFile f;
    f.lattice = InvolutionLattice(BilinearLattice(gram.rows(), gram), sigma);
    if (j.contains("sublattices")) {
        for (const auto& [name, val] : j.at("sublattices").items()) {
            IntMat rows = grid_from_json(val);
            if (rows.rows() > 0 && rows.cols() != gram.rows())
                throw InputError("sublattice \"" + name + "\" vectors have wrong length");
            IntMat basis = rows.rows() == 0 ? IntMat(gram.rows(), 0) : rows.transpose();
            f.sublattices.emplace(name, std::move(basis));
        }
    }
    return f;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse_json_input(const std::string& path) {
    try {
        return nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed input: ") + e.what());
    }
}

} // namespace prym
