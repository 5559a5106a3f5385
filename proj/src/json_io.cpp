#include "varietylab/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "varietylab/error.hpp"

namespace vlab {

using nlohmann::json;
using nlohmann::ordered_json;

Algebra algebra_from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw error(std::string("invalid JSON: ") + e.what());
    }
    for (const char *key : {"q", "dim", "table"})
        if (!j.contains(key))
            throw error(std::string("algebra JSON missing field '") + key + "'");
    int q = j.at("q").get<int>();
    Field F(q);
    if (j.contains("p") && j.at("p").get<int>() != F.p())
        throw error("field 'p' inconsistent with q");
    if (j.contains("k") && j.at("k").get<int>() != F.k())
        throw error("field 'k' inconsistent with q");
    long long dim = j.at("dim").get<long long>();
    if (dim < 0)
        throw error("'dim' must be nonnegative");
    std::size_t m = std::size_t(dim);
    const json &tab = j.at("table");
    if (!tab.is_array() || tab.size() != m)
        throw error("'table' must be an array of dim rows");
    std::vector<fel> tensor(m * m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!tab[i].is_array() || tab[i].size() != m)
            throw error("'table' rows must each have dim entries");
        for (std::size_t jj = 0; jj < m; ++jj) {
            const json &cell = tab[i][jj];
            if (!cell.is_array() || cell.size() != m)
                throw error("'table' entries must be coordinate vectors of length dim");
            for (std::size_t l = 0; l < m; ++l) {
                long long v = cell[l].get<long long>();
                if (v < 0 || v >= q)
                    throw error("structure constant out of range 0..q-1");
                tensor[(i * m + jj) * m + l] = fel(v);
            }
        }
    }
    return make_algebra(F, m, std::move(tensor));
}

std::string algebra_to_json_text(const Algebra &A) {
    ordered_json j;
    j["q"] = A.F.q();
    j["p"] = A.F.p();
    j["k"] = A.F.k();
    j["dim"] = A.m;
    ordered_json tab = ordered_json::array();
    for (std::size_t i = 0; i < A.m; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < A.m; ++jj) {
            ordered_json cell = ordered_json::array();
            for (std::size_t l = 0; l < A.m; ++l)
                cell.push_back(int(A.c(i, jj, l)));
            row.push_back(std::move(cell));
        }
        tab.push_back(std::move(row));
    }
    j["table"] = std::move(tab);
    return j.dump(2) + "\n";
}

Algebra load_algebra_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open algebra file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    try {
        return algebra_from_json_text(text);
    } catch (const error &e) {
        throw error(path + ": " + e.what());
    }
}

void save_algebra_file(const Algebra &A, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw error("cannot write algebra file: " + path);
    out << algebra_to_json_text(A);
}

} // namespace vlab
