#include "awm/complexity.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "awm/errors.hpp"

namespace awm {

namespace {

BigInt pow2(const BigInt& exponent) {
    if (exponent < 0 || exponent > kMaxStateExponent)
        throw InvalidConfig("state count exponent out of range: " + exponent.str());
    BigInt out = 1;
    out <<= static_cast<unsigned>(exponent);
    return out;
}

std::uint64_t require(std::optional<std::uint64_t> v, const char* name) {
    if (!v) throw InvalidConfig(std::string("level 3 requires ") + name);
    if (*v == 0) throw InvalidConfig(std::string("level 3 requires ") + name + " >= 1");
    return *v;
}

std::string cell(const BigInt& v) {
    const std::string s = v.str();
    return s.size() <= 12 ? s : "≈" + scientific(v);
}

}  // namespace

BigInt count_actions(Level level, std::uint64_t n, std::optional<std::uint64_t> m, std::optional<std::uint64_t> o) {
    if (n == 0) throw InvalidConfig("N must be >= 1");
    const BigInt files = n;
    switch (level) {
        case Level::L1: return 2 * files;
        case Level::L2: return 3 * files;
        case Level::L3: {
            const BigInt names = require(m, "M");
            const BigInt values = require(o, "O");
            return 3 * (files + files * names * values);
        }
    }
    throw InvalidConfig("unknown level");
}

BigInt count_states(Level level, std::uint64_t n, std::optional<std::uint64_t> m, std::optional<std::uint64_t> o) {
    return pow2(count_actions(level, n, m, o) - 1);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

BigInt count_actions_l4_sum(std::uint64_t n, std::uint64_t m, std::uint64_t o) {
    BigInt total = 0;
    BigInt o_pow = 1;
    for (std::uint64_t i = 0; i <= m; ++i) {
        total += binomial(m, i) * o_pow;
        o_pow *= o;
    }
    return 2 * BigInt(n) * total;
}

BigInt count_actions_l4_closed(std::uint64_t n, std::uint64_t m, std::uint64_t o) {
    return 2 * BigInt(n) * boost::multiprecision::pow(BigInt(1) + o, static_cast<unsigned>(m));
}

BigInt count_actions_l4(std::uint64_t n, std::uint64_t m, std::uint64_t o) {
    if (m > std::numeric_limits<unsigned>::max()) throw InvalidConfig("M too large");
    BigInt sum = count_actions_l4_sum(n, m, o);
    if (sum != count_actions_l4_closed(n, m, o))
        throw std::logic_error("level-4 summation and closed form disagree");
    return sum;
}

BigInt count_actions_l4(std::uint64_t n, std::uint64_t m, std::uint64_t o, std::uint64_t p) {
    if (p == m) return count_actions_l4(n, m, o);
    if (p == 0) return 2 * BigInt(n);
    if (p == 1) return 2 * BigInt(n) + 2 * BigInt(n) * m * o;
    throw InvalidConfig("level-4 count is only defined for P = 0, P = 1 or P = M");
}

ComplexityReport complexity_report(int level, std::uint64_t n, std::optional<std::uint64_t> m,
                                   std::optional<std::uint64_t> o, std::optional<std::uint64_t> p) {
    ComplexityReport r;
    r.level = level;
    r.n = n;
    if (level >= 1 && level <= 3) {
        if (p) throw InvalidConfig("P only applies to level 4");
        const auto lvl = static_cast<Level>(level);
        if (lvl == Level::L3) {
            r.m = m;
            r.o = o;
        }
        r.actions = count_actions(lvl, n, r.m, r.o);
        r.states = pow2(r.actions - 1);
        return r;
    }
    if (level == 4) {
        if (!m || !o) throw InvalidConfig("level 4 requires M and O");
        r.m = m;
        r.o = o;
        r.p = p.value_or(*m);
        r.actions = count_actions_l4(n, *m, *o, *r.p);
        r.states = pow2(r.actions);
        return r;
    }
    throw InvalidConfig("level must be 1, 2, 3 or 4");
}

std::string scientific(const BigInt& value, int significant) {
    if (value <= 0) return value.str();
    const std::string digits = value.str();
    if (static_cast<int>(digits.size()) <= significant) return digits;
    // Round to `significant` digits using the exact decimal expansion.
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits.size() - significant));
    BigInt mantissa = (value + scale / 2) / scale;
    int exponent = static_cast<int>(digits.size()) - 1;
    std::string m = mantissa.str();
    if (static_cast<int>(m.size()) > significant) {  // 9.96 -> 10.0
        m.pop_back();
        ++exponent;
    }
    std::string out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    return out + "e" + std::to_string(exponent);
}

std::string to_json(const ComplexityReport& r) {
    using nlohmann::json;
    auto big = [](const BigInt& v) -> json {
        if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
        return v.str();
    };
    auto opt = [](const std::optional<std::uint64_t>& v) -> json { return v ? json(*v) : json(nullptr); };
    json j{{"format_version", 1}, {"level", r.level}, {"n", r.n},        {"m", opt(r.m)},
           {"o", opt(r.o)},       {"p", opt(r.p)},    {"actions", big(r.actions)},
           {"states", big(r.states)}, {"states_approx", scientific(r.states)}};
    return j.dump();
}

std::string format_table(const std::vector<ComplexityReport>& rows) {
    if (rows.empty()) return {};
    const bool params = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.m.has_value(); });
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"#files"};
    if (params) {
        header.push_back("#pars");
        header.push_back("#pvals");
    }
    if (rows.front().p) header.push_back("P");
    header.push_back("#actions");
    header.push_back("#states");
    cells.push_back(header);
    for (const ComplexityReport& r : rows) {
        std::vector<std::string> line{std::to_string(r.n)};
        if (params) {
            line.push_back(r.m ? std::to_string(*r.m) : "-");
            line.push_back(r.o ? std::to_string(*r.o) : "-");
        }
        if (rows.front().p) line.push_back(r.p ? std::to_string(*r.p) : "-");
        line.push_back(cell(r.actions));
        line.push_back(cell(r.states));
        cells.push_back(line);
    }
    // "≈" is three bytes but one column.
    auto width = [](const std::string& s) {
        return s.size() - 2 * static_cast<std::size_t>(s.rfind("≈", 0) == 0);
    };
    std::vector<std::size_t> w(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) w[c] = std::max(w[c], width(line[c]));
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t c = 0; c < cells[i].size(); ++c) {
            if (c) os << "  ";
            os << std::string(w[c] - width(cells[i][c]), ' ') << cells[i][c];
        }
        os << '\n';
        if (i == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < w.size(); ++c) total += w[c] + (c ? 2 : 0);
            os << std::string(total, '-') << '\n';
        }
    }
    return os.str();
}

std::vector<ComplexityReport> reference_rows(int level) {
    std::vector<ComplexityReport> rows;
    switch (level) {
        case 1:
        case 2:
            for (std::uint64_t n : {2, 3, 5, 10}) rows.push_back(complexity_report(level, n));
            break;
        case 3:
            for (auto [n, m, o] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{2, 2, 2},
                                   {2, 5, 5}, {5, 2, 2}, {5, 5, 5}, {10, 5, 5}})
                rows.push_back(complexity_report(3, n, m, o));
            break;
        default: throw InvalidConfig("reference rows exist for levels 1-3 only");
    }
    return rows;
}

}  // namespace awm
