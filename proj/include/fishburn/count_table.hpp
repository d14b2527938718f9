#ifndef FISHBURN_COUNT_TABLE_HPP
#define FISHBURN_COUNT_TABLE_HPP

#include <map>
#include <string>
#include <vector>

#include "fishburn/rational.hpp"

#include <json.hpp>

namespace fishburn {

// Counts p_{n,k} of Lambda-FMs by size n and dimension k, with row sums
// a_n.  Counts are exact rationals so non-integer entry weights (the
// exponential prototype) fit; integer specs always store integers.
struct CountTable {
    int maxsize = 0;
    std::vector<std::map<int, Rat>> rows; // rows[n]: k -> p_{n,k}, nonzero entries only
    std::vector<Rat> row_sums;            // a_n

    Rat count(int n, int k) const {
        if (n < 0 || n > maxsize) raise(errc::invalid_argument, "size out of table range");
        auto it = rows[static_cast<size_t>(n)].find(k);
        return it == rows[static_cast<size_t>(n)].end() ? Rat(0) : it->second;
    }

    // CSV with header "n,k,count"; zero entries are omitted.
    std::string to_csv() const {
        std::string out = "n,k,count\n";
        for (int n = 0; n <= maxsize; ++n)
            for (const auto& [k, c] : rows[static_cast<size_t>(n)])
                out += std::to_string(n) + "," + std::to_string(k) + "," + rat_to_string(c) + "\n";
        return out;
    }

    // Rows as nested arrays of [k, "count"]; big integers as decimal strings.
    nlohmann::json to_json() const {
        nlohmann::json rows_json = nlohmann::json::array();
        for (int n = 0; n <= maxsize; ++n) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& [k, c] : rows[static_cast<size_t>(n)])
                row.push_back({k, rat_to_string(c)});
            rows_json.push_back(row);
        }
        nlohmann::json sums = nlohmann::json::array();
        for (const Rat& a : row_sums) sums.push_back(rat_to_string(a));
        return {{"maxsize", maxsize}, {"rows", rows_json}, {"row_sums", sums}};
    }

    static CountTable from_json(const nlohmann::json& j) {
        CountTable t;
        t.maxsize = j.at("maxsize").get<int>();
        t.rows.resize(static_cast<size_t>(t.maxsize) + 1);
        int n = 0;
        for (const auto& row : j.at("rows")) {
            for (const auto& cell : row)
                t.rows[static_cast<size_t>(n)][cell.at(0).get<int>()] =
                    rat_from_string(cell.at(1).get<std::string>());
            ++n;
        }
        for (const auto& a : j.at("row_sums")) t.row_sums.push_back(rat_from_string(a.get<std::string>()));
        return t;
    }

    friend bool operator==(const CountTable& a, const CountTable& b) {
        return a.maxsize == b.maxsize && a.rows == b.rows && a.row_sums == b.row_sums;
    }
};

} // namespace fishburn

#endif
