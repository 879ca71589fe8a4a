#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "nullcell/module.hpp"

namespace nullcell {

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(path + ": invalid JSON: " + e.what());
    }
    return j;
}

template <typename T>
T field(const nlohmann::json& j, const std::string& path, const std::string& name) {
    if (!j.contains(name)) throw input_error(path + ": missing field '" + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw input_error(path + ": field '" + name + "' has the wrong shape");
    }
}

}  // namespace detail

// Algebra file: either structure constants
//   {"p": 3, "dim": 6, "one": [..], "mul": [[[..], ..], ..]}
// or a group table with the identity at index 0
//   {"p": 3, "group_table": [[..], ..]}
inline AlgebraPtr load_algebra(const std::string& path) {
    auto j = detail::read_json_file(path);
    u32 p = detail::field<u32>(j, path, "p");
    if (j.contains("group_table")) {
        auto table = detail::field<std::vector<std::vector<std::size_t>>>(j, path, "group_table");
        try {
            return group_algebra(table, p);
        } catch (const input_error& e) {
            throw input_error(path + ": field 'group_table': " + e.what());
        }
    }
    auto dim = detail::field<std::size_t>(j, path, "dim");
    auto one = detail::field<std::vector<u32>>(j, path, "one");
    auto mul3 = detail::field<std::vector<std::vector<std::vector<u32>>>>(j, path, "mul");
    if (mul3.size() != dim) throw input_error(path + ": field 'mul' must have dim rows");
    std::vector<u32> mul(dim * dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (mul3[i].size() != dim) throw input_error(path + ": field 'mul' row " + std::to_string(i) + " must have dim entries");
        for (std::size_t jj = 0; jj < dim; ++jj) {
            if (mul3[i][jj].size() != dim)
                throw input_error(path + ": field 'mul[" + std::to_string(i) + "][" +
                                  std::to_string(jj) + "]' must have dim coefficients");
            for (std::size_t k = 0; k < dim; ++k) mul[(i * dim + jj) * dim + k] = mul3[i][jj][k];
        }
    }
    try {
        return build_algebra(p, dim, std::move(mul), std::move(one));
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

// Module file: {"dim": m, "action": [flat row-major m*m, .. one per basis]}
inline Module load_module(const std::string& path, AlgebraPtr alg) {
    auto j = detail::read_json_file(path);
    auto dim = detail::field<std::size_t>(j, path, "dim");
    auto action = detail::field<std::vector<std::vector<u32>>>(j, path, "action");
    if (action.size() != alg->dim)
        throw input_error(path + ": field 'action' must have one matrix per algebra basis element (" +
                          std::to_string(alg->dim) + ")");
    Module m{alg, dim, {}};
    for (std::size_t i = 0; i < action.size(); ++i) {
        if (action[i].size() != dim * dim)
            throw input_error(path + ": field 'action[" + std::to_string(i) + "]' must have dim^2 row-major entries");
        m.action.push_back(Mat::from_rows(dim, dim, alg->p, action[i]));
    }
    validate_module(m, path);  // error messages lead with the path
    return m;
}

inline nlohmann::json algebra_to_json(const Algebra& a) {
    nlohmann::json mul3 = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.dim; ++j) {
            std::vector<u32> coeffs(a.dim);
            for (std::size_t k = 0; k < a.dim; ++k) coeffs[k] = a.c(i, j, k);
            row.push_back(coeffs);
        }
        mul3.push_back(row);
    }
    return {{"p", a.p}, {"dim", a.dim}, {"one", a.one}, {"mul", mul3}};
}

inline nlohmann::json module_to_json(const Module& m) {
    nlohmann::json action = nlohmann::json::array();
    for (const auto& a : m.action) action.push_back(a.entries());
    return {{"dim", m.dim}, {"action", action}};
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw input_error(path + ": cannot write file");
    out << j.dump(2) << '\n';
}

}  // namespace nullcell
