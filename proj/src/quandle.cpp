#include "quandle.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace symq {

std::string Violation::describe() const {
    std::ostringstream out;
    if (axiom == "idempotence") {
        out << "axiom (i) fails: " << witness[0] << " |> " << witness[0]
            << " != " << witness[0];
    } else if (axiom == "column") {
        out << "axiom (ii) fails: column " << witness[2] << " maps rows "
            << witness[0] << " and " << witness[1] << " to the same value";
    } else {
        out << "axiom (iii) fails at (" << witness[0] << ", " << witness[1]
            << ", " << witness[2] << ")";
    }
    return out.str();
}

Quandle::Quandle(std::vector<std::vector<int>> table, std::optional<ModuleContext> context)
    : table_(std::move(table)), context_(std::move(context)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw Error::invalid("empty quandle table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table_[i].size()) != n)
            throw Error::invalid("quandle table is not square at row " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j)
            if (table_[i][j] < 1 || table_[i][j] > n)
                throw Error::invalid("table entry (" + std::to_string(i + 1) + ", " +
                                     std::to_string(j + 1) + ") out of range 1.." +
                                     std::to_string(n));
    }
    inverse_.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) inverse_[table_[i][j] - 1][j] = i + 1;
}

Quandle Quandle::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string tok;
        std::vector<int> row;
        while (fields >> tok) {
            if (tok[0] == '#') break;
            size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw Error::invalid("bad table entry '" + tok + "'");
            }
            if (used != tok.size()) throw Error::invalid("bad table entry '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Quandle(std::move(rows));
}

std::string Quandle::format() const {
    const int n = size();
    int width = 1;
    for (int v = n; v >= 10; v /= 10) ++width;
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            std::string s = std::to_string(table_[i][j]);
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Violation> Quandle::validate() const {
    const int n = size();
    std::vector<Violation> report;
    for (int i = 1; i <= n; ++i)
        if (apply(i, i) != i) report.push_back({"idempotence", {i}});
    for (int j = 1; j <= n; ++j) {
        std::vector<int> first(n, 0);
        for (int i = 1; i <= n; ++i) {
            int v = apply(i, j);
            if (first[v - 1])
                report.push_back({"column", {first[v - 1], i, j}});
            else
                first[v - 1] = i;
        }
    }
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            int jk = apply(j, k);
            for (int i = 1; i <= n; ++i)
                if (apply(apply(i, j), k) != apply(apply(i, k), jk))
                    report.push_back({"distributivity", {i, j, k}});
        }
    return report;
}

Quandle Quandle::dual() const {
    std::optional<ModuleContext> ctx;
    if (context_) {
        const Ring& r = context_->ring;
        int d = context_->dim;
        std::vector<std::vector<int>> neg(d, std::vector<int>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) neg[i][j] = r.neg(context_->gram.at(i, j));
        ctx = ModuleContext{r, d, Gram(r, neg)};
    }
    return Quandle(inverse_, std::move(ctx));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<int>> Quandle::orbits() const {
    const int n = size();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uf.unite(i, table_[i][j] - 1);
    std::map<int, std::vector<int>> parts;
    for (int i = 0; i < n; ++i) parts[uf.find(i)].push_back(i + 1);
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (auto& [root, members] : parts) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<int> Quandle::trivial_component() const {
    const int n = size();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        bool trivial = true;
        for (int j = 1; j <= n && trivial; ++j)
            trivial = apply(i, j) == i && apply(j, i) == j;
        if (trivial) out.push_back(i);
    }
    return out;
}

bool Quandle::is_almost_connected() const {
    std::vector<int> d = trivial_component();
    std::set<int> in_d(d.begin(), d.end());
    std::vector<int> complement;
    for (int i = 1; i <= size(); ++i)
        if (!in_d.count(i)) complement.push_back(i);
    std::vector<std::vector<int>> rest;
    for (auto& orbit : orbits()) {
        if (orbit.size() == 1 && in_d.count(orbit[0])) continue;
        rest.push_back(orbit);
    }
    if (rest.empty()) return complement.empty();
    return rest.size() == 1 && rest[0] == complement;
}

Quandle Quandle::disjoint_union(const Quandle& other) const {
    const int n = size(), m = other.size();
    std::vector<std::vector<int>> t(n + m, std::vector<int>(n + m));
    for (int i = 0; i < n + m; ++i)
        for (int j = 0; j < n + m; ++j) {
            if (i < n && j < n)
                t[i][j] = table_[i][j];
            else if (i >= n && j >= n)
                t[i][j] = other.table_[i - n][j - n] + n;
            else
                t[i][j] = i + 1;
        }
    return Quandle(std::move(t));
}

Polynomial Quandle::quandle_polynomial() const {
    const int n = size();
    Polynomial poly({"s", "t"});
    for (int i = 1; i <= n; ++i) {
        int c = 0, r = 0;
        for (int j = 1; j <= n; ++j) {
            if (apply(j, i) == j) ++c;
            if (apply(i, j) == i) ++r;
        }
        poly.add_term({c, r}, 1);
    }
    return poly;
}

std::vector<int> Quandle::generated_subquandle(std::vector<int> seed) const {
    std::set<int> members(seed.begin(), seed.end());
    std::vector<int> work(members.begin(), members.end());
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        std::vector<int> snapshot(members.begin(), members.end());
        for (int y : snapshot) {
            for (int z :
                 {apply(x, y), apply(y, x), apply_inverse(x, y), apply_inverse(y, x)}) {
                if (members.insert(z).second) work.push_back(z);
            }
        }
    }
    return {members.begin(), members.end()};
}

std::vector<std::vector<int>> Quandle::subquandles(std::size_t cap) const {
    const int n = size();
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> work;
    for (int i = 1; i <= n; ++i) {
        auto s = generated_subquandle({i});
        if (found.insert(s).second) work.push_back(std::move(s));
    }
    while (!work.empty()) {
        std::vector<int> s = std::move(work.back());
        work.pop_back();
        std::set<int> in_s(s.begin(), s.end());
        for (int x = 1; x <= n; ++x) {
            if (in_s.count(x)) continue;
            std::vector<int> seed = s;
            seed.push_back(x);
            auto bigger = generated_subquandle(std::move(seed));
            if (found.insert(bigger).second) {
                if (found.size() > cap)
                    throw Error::limit("more than " + std::to_string(cap) + " subquandles");
                work.push_back(std::move(bigger));
            }
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

struct IsoSearch {
    const Quandle& a;
    const Quandle& b;
    int n;
    std::vector<int> phi;           // 1-based images, 0 = unassigned
    std::vector<char> used;         // which b-elements are taken
    std::vector<std::vector<int>> candidates;

    bool assign(int x, int y, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> queue{{x, y}};
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            if (phi[u - 1]) {
                if (phi[u - 1] != v) return false;
                continue;
            }
            if (used[v - 1]) return false;
            phi[u - 1] = v;
            used[v - 1] = 1;
            trail.push_back(u);
            for (int w = 1; w <= n; ++w) {
                if (!phi[w - 1]) continue;
                int fw = phi[w - 1];
                queue.emplace_back(a.apply(u, w), b.apply(v, fw));
                queue.emplace_back(a.apply(w, u), b.apply(fw, v));
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            int u = trail.back();
            trail.pop_back();
            used[phi[u - 1] - 1] = 0;
            phi[u - 1] = 0;
        }
    }

    bool search(std::vector<int>& trail) {
        int next = 0;
        for (int i = 1; i <= n; ++i)
            if (!phi[i - 1]) {
                next = i;
                break;
            }
        if (!next) return true;
        for (int y : candidates[next - 1]) {
            if (used[y - 1]) continue;
            size_t mark = trail.size();
            if (assign(next, y, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> Quandle::find_isomorphism(const Quandle& other) const {
    const int n = size();
    if (other.size() != n) return std::nullopt;

    auto profile_of = [](const Quandle& q) {
        std::vector<std::array<int, 3>> prof(q.size());
        for (int i = 1; i <= q.size(); ++i) {
            int c = 0, r = 0;
            for (int j = 1; j <= q.size(); ++j) {
                if (q.apply(j, i) == j) ++c;
                if (q.apply(i, j) == i) ++r;
            }
            prof[i - 1] = {c, r, 0};
        }
        for (auto& orbit : q.orbits())
            for (int i : orbit) prof[i - 1][2] = static_cast<int>(orbit.size());
        return prof;
    };
    auto pa = profile_of(*this), pb = profile_of(other);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    IsoSearch s{*this, other, n, std::vector<int>(n, 0), std::vector<char>(n, 0), {}};
    s.candidates.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pa[i] == pb[j]) s.candidates[i].push_back(j + 1);

    std::vector<int> trail;
    if (!s.search(trail)) return std::nullopt;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (s.phi[apply(i, j) - 1] != other.apply(s.phi[i - 1], s.phi[j - 1]))
                return std::nullopt;
    return s.phi;
}

} // namespace symq
