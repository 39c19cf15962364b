#include "kanspec/gamma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kanspec {

bool is_valid(const GammaMorphism& f) {
    if (f.src < 0 || f.tgt < 0) return false;
    if (static_cast<int>(f.parts.size()) != f.src) return false;
    std::vector<bool> used(static_cast<size_t>(f.tgt) + 1, false);
    for (const auto& p : f.parts) {
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] >= p[i + 1]) return false;
        for (int v : p) {
            if (v < 1 || v > f.tgt) return false;
            if (used[static_cast<size_t>(v)]) return false;  // disjointness
            used[static_cast<size_t>(v)] = true;
        }
    }
    return true;
}

GammaMorphism make_gamma(int src, int tgt, std::vector<std::vector<int>> parts) {
    GammaMorphism f{src, tgt, std::move(parts)};
    if (!is_valid(f)) throw std::invalid_argument("make_gamma: parts not disjoint or out of range");
    return f;
}

GammaMorphism gamma_identity(int k) {
    GammaMorphism f{k, k, {}};
    for (int i = 1; i <= k; ++i) f.parts.push_back({i});
    return f;
}

GammaMorphism gamma_compose(const GammaMorphism& f, const GammaMorphism& g) {
    if (f.tgt != g.src) throw std::invalid_argument("gamma_compose: object mismatch");
    GammaMorphism h{f.src, g.tgt, {}};
    for (const auto& p : f.parts) {
        std::vector<int> u;
        for (int j : p) u.insert(u.end(), g.parts[static_cast<size_t>(j) - 1].begin(), g.parts[static_cast<size_t>(j) - 1].end());
        std::sort(u.begin(), u.end());
        h.parts.push_back(std::move(u));
    }
    if (!is_valid(h)) throw std::logic_error("gamma_compose: disjointness lost");
    return h;
}

GammaMorphism simplex_to_gamma(const SimplexMap& phi) {
    check_valid(phi, "simplex_to_gamma");
    GammaMorphism f{phi.src, phi.tgt, {}};
    for (int i = 1; i <= phi.src; ++i) {
        std::vector<int> p;
        for (int j = phi.values[static_cast<size_t>(i) - 1] + 1; j <= phi.values[static_cast<size_t>(i)]; ++j)
            p.push_back(j);
        f.parts.push_back(std::move(p));
    }
    return f;
}

std::vector<GammaMorphism> all_gamma_maps(int k, int m) {
    std::vector<GammaMorphism> out;
    GammaMorphism f{k, m, std::vector<std::vector<int>>(static_cast<size_t>(k))};
    // assign each element of {1..m} to one of the k parts or to none, then sort
    std::function<void(int)> rec = [&](int v) {
        if (v > m) {
            out.push_back(f);
            return;
        }
        rec(v + 1);  // unassigned
        for (int i = 0; i < k; ++i) {
            f.parts[static_cast<size_t>(i)].push_back(v);
            rec(v + 1);
            f.parts[static_cast<size_t>(i)].pop_back();
        }
    };
    rec(1);
    return out;
}

std::string to_string(const GammaMorphism& f) {
    std::string s = "<" + std::to_string(f.src) + ">-><" + std::to_string(f.tgt) + ">:";
    for (size_t i = 0; i < f.parts.size(); ++i) {
        s += " " + std::to_string(i + 1) + "|->{";
        for (size_t t = 0; t < f.parts[i].size(); ++t) s += (t ? "," : "") + std::to_string(f.parts[i][t]);
        s += "}";
    }
    return s;
}

}  // namespace kanspec
