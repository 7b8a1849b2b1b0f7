#include "symplectic.hpp"

#include "error.hpp"

#include <algorithm>

namespace symq {

SymplecticSpace::SymplecticSpace(Ring r, int d, Gram g)
    : ring(std::move(r)), dim(d), gram(std::move(g)) {
    if (dim < 1) throw Error::invalid("module dimension must be at least 1");
    if (gram.dim() != dim)
        throw Error::invalid("Gram matrix is " + std::to_string(gram.dim()) +
                             "x" + std::to_string(gram.dim()) + " but dimension is " +
                             std::to_string(dim));
}

Quandle build_symplectic(const SymplecticSpace& space, long long cap) {
    Module mod = space.module();
    long long n = mod.element_count();
    if (n > cap)
        throw Error::limit("module has " + std::to_string(n) +
                           " elements, table cap is " + std::to_string(cap));
    std::vector<Vec> elems(n);
    for (long long i = 0; i < n; ++i) elems[i] = mod.vector_of(i + 1);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            int c = mod.bilinear(space.gram, elems[i], elems[j]);
            table[i][j] = mod.index_of(mod.add(elems[i], mod.scale(c, elems[j])));
        }
    return Quandle(std::move(table), ModuleContext{space.ring, space.dim, space.gram});
}

std::vector<Vec> radical(const SymplecticSpace& space) {
    Module mod = space.module();
    long long n = mod.element_count();
    if (n > (1 << 20)) throw Error::limit("module too large to enumerate");
    const Ring& r = space.ring;
    std::vector<Vec> out;
    for (long long idx = 1; idx <= n; ++idx) {
        Vec x = mod.vector_of(idx);
        bool zero = true;
        for (int j = 0; j < space.dim && zero; ++j) {
            int s = 0;
            for (int i = 0; i < space.dim; ++i)
                s = r.add(s, r.mul(x[i], space.gram.at(i, j)));
            zero = s == 0;
        }
        if (zero) out.push_back(std::move(x));
    }
    return out;
}

ReduceResult symplectic_reduce(const SymplecticSpace& space) {
    if (!space.ring.is_field())
        throw Error::invalid("symplectic reduction requires a field");
    const Ring& r = space.ring;
    Module mod = space.module();
    const int d = space.dim;

    std::vector<Vec> pending(d);
    for (int i = 0; i < d; ++i) {
        pending[i] = mod.zero();
        pending[i][i] = 1;
    }
    auto form = [&](const Vec& x, const Vec& y) { return mod.bilinear(space.gram, x, y); };

    std::vector<Vec> pairs;
    while (true) {
        int pi = -1, pj = -1;
        for (size_t i = 0; i < pending.size() && pi < 0; ++i)
            for (size_t j = i + 1; j < pending.size(); ++j)
                if (form(pending[i], pending[j]) != 0) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) break;
        Vec u = pending[pi];
        Vec w = mod.scale(r.inverse(form(u, pending[pj])), pending[pj]);
        pending.erase(pending.begin() + pj);
        pending.erase(pending.begin() + pi);
        for (Vec& v : pending) {
            Vec adjusted = mod.add(v, mod.scale(form(v, u), w));
            v = mod.add(adjusted, mod.scale(r.neg(form(v, w)), u));
        }
        pairs.push_back(std::move(u));
        pairs.push_back(std::move(w));
    }

    ReduceResult res;
    res.rank = static_cast<int>(pairs.size());
    res.basis = std::move(pairs);
    for (Vec& v : pending) res.basis.push_back(std::move(v));
    return res;
}

std::vector<std::vector<int>> standard_form(const Ring& ring, int dim, int rank) {
    if (rank < 0 || rank > dim || rank % 2 != 0)
        throw Error::invalid("rank of an alternating form must be even and at most the dimension");
    std::vector<std::vector<int>> a(dim, std::vector<int>(dim, 0));
    for (int k = 0; k + 1 < rank; k += 2) {
        a[k][k + 1] = ring.one();
        a[k + 1][k] = ring.neg(ring.one());
    }
    return a;
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat mat_mul(const Ring& r, const Mat& x, const Mat& y) {
    int n = static_cast<int>(x.size());
    Mat z(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) z[i][j] = r.add(z[i][j], r.mul(x[i][k], y[k][j]));
    return z;
}

Mat mat_transpose(const Mat& x) {
    int n = static_cast<int>(x.size());
    Mat z(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z[i][j] = x[j][i];
    return z;
}

int mat_det(const Ring& r, const Mat& x) {
    int n = static_cast<int>(x.size());
    if (n == 1) return x[0][0];
    int det = 0;
    for (int k = 0; k < n; ++k) {
        if (x[0][k] == 0) continue;
        Mat minor(n - 1, std::vector<int>(n - 1));
        for (int i = 1; i < n; ++i) {
            int c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][c++] = x[i][j];
            }
        }
        int term = r.mul(x[0][k], mat_det(r, minor));
        det = k % 2 == 0 ? r.add(det, term) : r.sub(det, term);
    }
    return det;
}

bool conjugates_to(const Ring& r, const Mat& p, const Gram& a, const Gram& b) {
    int d = static_cast<int>(p.size());
    Mat pa = mat_mul(r, p, a.entries());
    Mat papt = mat_mul(r, pa, mat_transpose(p));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (papt[i][j] != b.at(i, j)) return false;
    return true;
}

} // namespace

IsometryReport is_isometric(const SymplecticSpace& a, const SymplecticSpace& b, long long cap) {
    if (!(a.ring == b.ring) || a.dim != b.dim)
        throw Error::invalid("isometry requires the same ring and dimension");
    const Ring& r = a.ring;
    const int d = a.dim;

    if (d == 2) {
        int alpha = a.gram.at(0, 1), beta = b.gram.at(0, 1);
        for (int u = 0; u < r.order(); ++u) {
            if (!r.is_unit(u) || r.mul(u, alpha) != beta) continue;
            Mat p{{u, 0}, {0, 1}};
            if (conjugates_to(r, p, a.gram, b.gram)) return {true, p};
        }
        return {false, std::nullopt};
    }

    long long space_size = 1;
    for (int i = 0; i < d * d; ++i) {
        space_size *= r.order();
        if (space_size > cap)
            throw Error::limit("isometry search space exceeds " + std::to_string(cap));
    }
    Mat p(d, std::vector<int>(d, 0));
    std::vector<int> digits(d * d, 0);
    for (long long step = 0; step < space_size; ++step) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) p[i][j] = digits[i * d + j];
        if (conjugates_to(r, p, a.gram, b.gram) && r.is_unit(mat_det(r, p)))
            return {true, p};
        for (int i = d * d - 1; i >= 0; --i) {
            if (++digits[i] < r.order()) break;
            digits[i] = 0;
        }
    }
    return {false, std::nullopt};
}

ConjectureReport conjecture_scan(int lo, int hi, int dim) {
    if (dim != 2) throw Error::invalid("conjecture scan supports dimension 2 only");
    if (lo < 2 || lo > hi) throw Error::invalid("bad modulus range");
    if (hi > 9) throw Error::limit("conjecture scan caps the modulus at 9");

    ConjectureReport report;
    report.all_agree = true;
    for (int n = lo; n <= hi; ++n) {
        Ring ring = Ring::modular(n);
        std::vector<SymplecticSpace> spaces;
        std::vector<Quandle> quandles;
        for (int alpha = 0; alpha < n; ++alpha) {
            Gram g(ring, {{0, alpha}, {ring.neg(alpha), 0}});
            spaces.emplace_back(ring, 2, g);
            quandles.push_back(build_symplectic(spaces.back()));
        }

        auto partition = [n](auto&& equivalent) {
            std::vector<std::vector<int>> classes;
            for (int alpha = 0; alpha < n; ++alpha) {
                bool placed = false;
                for (auto& cls : classes)
                    if (equivalent(cls.front(), alpha)) {
                        cls.push_back(alpha);
                        placed = true;
                        break;
                    }
                if (!placed) classes.push_back({alpha});
            }
            return classes;
        };

        ConjectureEntry entry;
        entry.modulus = n;
        entry.isomorphism_classes = partition([&](int x, int y) {
            return quandles[x].find_isomorphism(quandles[y]).has_value();
        });
        entry.isometry_classes = partition(
            [&](int x, int y) { return is_isometric(spaces[x], spaces[y]).isometric; });
        entry.agree = entry.isomorphism_classes == entry.isometry_classes;
        if (!entry.agree) {
            report.all_agree = false;
            auto same_class = [](const std::vector<std::vector<int>>& classes, int x, int y) {
                for (const auto& cls : classes)
                    if (std::find(cls.begin(), cls.end(), x) != cls.end())
                        return std::find(cls.begin(), cls.end(), y) != cls.end();
                return false;
            };
            for (int x = 0; x < n && !entry.counterexample; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (same_class(entry.isomorphism_classes, x, y) !=
                        same_class(entry.isometry_classes, x, y)) {
                        entry.counterexample = {x, y};
                        break;
                    }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace symq
