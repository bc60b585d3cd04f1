#pragma once

/// @file csv.hpp
/// @brief The g(n) table CSV: n,g_factorization,ell,log_g,largest_prime,ratio

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "landau/errors.hpp"
#include "landau/factorization.hpp"
#include "landau/table.hpp"

namespace landau {

inline constexpr std::string_view table_csv_header = "n,g_factorization,ell,log_g,largest_prime,ratio";

/// Decimal places of the real-valued columns.
inline constexpr int log_g_decimals = 12;
inline constexpr int ratio_decimals = 10;

struct TableRow {
    std::uint64_t n = 0;
    Factorization g_fact;
    std::uint64_t ell = 0;
    double log_g = 0;
    std::optional<std::uint64_t> largest_prime;
    std::optional<double> ratio;
};

inline TableRow make_row(const LandauTable& table, std::uint64_t n)
{
    TableRow row;
    row.n = n;
    row.g_fact = table.factorization(n);
    row.ell = table.ell_at(n);
    row.log_g = table.log_g_at(n);
    row.largest_prime = table.largest_prime_at(n);
    if (n >= 2) row.ratio = ratio_at(table, n);
    return row;
}

inline std::string format_fixed(double v, int decimals)
{
    char buf[64];
    int len = std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    if (len < 0 || static_cast<std::size_t>(len) >= sizeof buf) throw format_error("value too large to render");
    return std::string(buf, static_cast<std::size_t>(len));
}

inline std::string render_row(const TableRow& row)
{
    std::string out = std::to_string(row.n);
    out += ',';
    out += to_string(row.g_fact);
    out += ',';
    out += std::to_string(row.ell);
    out += ',';
    out += format_fixed(row.log_g, log_g_decimals);
    out += ',';
    if (row.largest_prime) out += std::to_string(*row.largest_prime);
    out += ',';
    if (row.ratio) out += format_fixed(*row.ratio, ratio_decimals);
    return out;
}

/// Quotes a field when it contains a comma, quote or newline.
inline std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Splits one CSV line on commas; fields carry no quoting.
inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    while (true) {
        auto comma = line.find(',');
        fields.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

namespace detail {

inline double parse_decimal(std::string_view s)
{
    if (s.empty()) throw format_error("empty decimal");
    std::size_t i = s[0] == '-' ? 1 : 0;
    bool point = false;
    bool digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.' && !point)
            point = true;
        else if (s[i] >= '0' && s[i] <= '9')
            digit = true;
        else
            throw format_error("bad decimal '" + std::string(s) + "'");
    }
    if (!digit) throw format_error("bad decimal '" + std::string(s) + "'");
    return std::strtod(std::string(s).c_str(), nullptr);
}

} // namespace detail

/// Inverse of render_row; throws format_error on malformed input.
inline TableRow parse_row(std::string_view line)
{
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto f = split_fields(line);
    if (f.size() != 6) throw format_error("expected 6 fields, found " + std::to_string(f.size()));
    TableRow row;
    row.n = detail::parse_u64(f[0]);
    row.g_fact = parse_factorization(f[1]);
    row.ell = detail::parse_u64(f[2]);
    row.log_g = detail::parse_decimal(f[3]);
    if (!f[4].empty()) row.largest_prime = detail::parse_u64(f[4]);
    if (!f[5].empty()) row.ratio = detail::parse_decimal(f[5]);
    if (row.g_fact.largest_prime() != row.largest_prime)
        throw format_error("largest_prime does not match the factorization");
    if (ell(row.g_fact) != row.ell) throw format_error("ell does not match the factorization");
    return row;
}

/// Header plus one row per n, ascending.
inline void write_table_csv(std::ostream& os, const LandauTable& table)
{
    os << table_csv_header << '\n';
    for (std::uint64_t n = 1; n <= table.max_n(); ++n) os << render_row(make_row(table, n)) << '\n';
}

} // namespace landau
