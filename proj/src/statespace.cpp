#include "asepq/statespace.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace asepq {

std::string Config::str() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : site) j.push_back(s);
    return j.dump();
}

std::optional<Config> Config::parse(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
    if (!j.is_array() || j.empty()) return std::nullopt;
    Config c;
    size_t width = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) return std::nullopt;
        if (width == 0) width = row.size();
        if (row.size() != width) return std::nullopt;
        std::vector<long> occ;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long>() < 0) return std::nullopt;
            occ.push_back(v.get<long>());
        }
        c.site.push_back(std::move(occ));
    }
    return c;
}

Config vacuum_config(long n, long j2, long L) {
    Config c;
    std::vector<long> holes(n, 0);
    holes.back() = j2;
    c.site.assign(L, holes);
    return c;
}

std::vector<std::vector<long>> site_states(long n, long j2) {
    if (n < 1) throw std::domain_error("site_states: need n >= 1");
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n, 0);
    auto rec = [&](auto&& self, long idx, long left) -> void {
        if (idx == n - 1) {
            cur[idx] = left;
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, j2);
    return out;
}

std::vector<Config> enumerate_configs(long n, long j2, long L) {
    const auto states = site_states(n, j2);
    std::vector<Config> out;
    Config cur;
    cur.site.resize(L);
    auto rec = [&](auto&& self, long x) -> void {
        if (x == L) {
            out.push_back(cur);
            return;
        }
        for (const auto& s : states) {
            cur.site[x] = s;
            self(self, x + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<long> sector_of(const Config& c, bool bounded) {
    const long m = bounded ? c.classes() - 1 : c.classes();
    std::vector<long> tot(m, 0);
    for (const auto& s : c.site)
        for (long i = 0; i < m; ++i) tot[i] += s[i];
    return tot;
}

std::vector<Config> enumerate_sector(long n, long j2, long L, const std::vector<long>& sector) {
    std::vector<Config> out;
    for (auto& c : enumerate_configs(n, j2, L))
        if (sector_of(c) == sector) out.push_back(std::move(c));
    return out;
}

std::vector<Config> enumerate_zero_range_sector(long L, const std::vector<long>& sector) {
    const long m = static_cast<long>(sector.size());
    std::vector<Config> out;
    Config cur;
    cur.site.assign(L, std::vector<long>(m, 0));
    std::vector<long> left = sector;
    auto rec = [&](auto&& self, long x, long i) -> void {
        if (x == L - 1 && i == 0) {
            // the last site takes whatever remains
            cur.site[x].assign(left.begin(), left.end());
            out.push_back(cur);
            return;
        }
        if (i == m) {
            self(self, x + 1, 0);
            return;
        }
        for (long v = 0; v <= left[i]; ++v) {
            cur.site[x][i] = v;
            left[i] -= v;
            self(self, x, i + 1);
            left[i] += v;
        }
        cur.site[x][i] = 0;
    };
    if (L == 1) {
        cur.site[0].assign(left.begin(), left.end());
        out.push_back(cur);
        return out;
    }
    rec(rec, 0, 0);
    return out;
}

std::vector<std::vector<long>> enumerate_sectors(long n, long j2, long L) {
    const long cap = j2 * L;
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n - 1, 0);
    auto rec = [&](auto&& self, long idx, long left) -> void {
        if (idx == n - 1) {
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, cap);
    return out;
}

std::optional<Config> swap_move(const Config& c, long x, long k, long l) {
    const long L = c.sites(), n = c.classes();
    if (x < 1 || x >= L || k < 1 || k > n || l < 1 || l > n) return std::nullopt;
    if (c.at(x, k) < 1 || c.at(x + 1, l) < 1) return std::nullopt;
    Config r = c;
    r.at(x, k) -= 1;
    r.at(x + 1, k) += 1;
    r.at(x + 1, l) -= 1;
    r.at(x, l) += 1;
    return r;
}

std::optional<Config> hop_move(const Config& c, long x, long y, long i) {
    const long L = c.sites(), m = c.classes();
    if (x < 1 || x > L || y < 1 || y > L || x == y || i < 1 || i > m) return std::nullopt;
    if (c.at(x, i) < 1) return std::nullopt;
    Config r = c;
    r.at(x, i) -= 1;
    r.at(y, i) += 1;
    return r;
}

long cumulative(const Config& c, long x, long a, long b) {
    if (b < a) return 0;
    if (x < 1 || x > c.sites() || a < 1 || b > c.classes())
        throw std::out_of_range("cumulative: index out of range");
    long s = 0;
    for (long i = a; i <= b; ++i) s += c.at(x, i);
    return s;
}

Config project_classes(const Config& c, const std::vector<long>& blocks) {
    long total = 0;
    for (long b : blocks) {
        if (b < 1) throw std::domain_error("project_classes: block sizes must be positive");
        total += b;
    }
    if (total != c.classes())
        throw std::domain_error("project_classes: block sizes must sum to the class count");
    Config r;
    for (const auto& s : c.site) {
        std::vector<long> row;
        long i = 0;
        for (long b : blocks) {
            long sum = 0;
            for (long t = 0; t < b; ++t) sum += s[i++];
            row.push_back(sum);
        }
        r.site.push_back(std::move(row));
    }
    return r;
}

Config class_reverse(const Config& c) {
    Config r = c;
    for (auto& s : r.site) std::reverse(s.begin(), s.end());
    return r;
}

Config space_reverse(const Config& c) {
    Config r = c;
    std::reverse(r.site.begin(), r.site.end());
    return r;
}

}  // namespace asepq
