#include "module.hpp"

#include "error.hpp"

#include <cctype>

namespace symq {

Gram::Gram(const Ring& ring, std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    size_t d = entries_.size();
    if (d == 0) throw Error::invalid("Gram matrix must be nonempty");
    for (const auto& row : entries_)
        if (row.size() != d) throw Error::invalid("Gram matrix must be square");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (entries_[i][j] < 0 || entries_[i][j] >= ring.order())
                throw Error::invalid("Gram entry out of range at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
    // Alternating is checked on its own, not derived from antisymmetry.
    for (size_t i = 0; i < d; ++i)
        if (entries_[i][i] != 0)
            throw Error::invalid("Gram matrix must be alternating (zero diagonal), nonzero at (" +
                                 std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (entries_[j][i] != ring.neg(entries_[i][j]))
                throw Error::invalid("Gram matrix must be antisymmetric: entry (" + std::to_string(j + 1) +
                                     "," + std::to_string(i + 1) + ") is not the negation of (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

Gram Gram::parse(const Ring& ring, std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::string cell;
    std::vector<int> row;
    auto flush_cell = [&] {
        size_t pos = 0;
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        size_t end = cell.size();
        while (end > pos && std::isspace(static_cast<unsigned char>(cell[end - 1]))) --end;
        std::string tok = cell.substr(pos, end - pos);
        cell.clear();
        if (tok.empty()) throw Error::invalid("Gram matrix: empty entry");
        bool negate = false;
        if (tok[0] == '-') {
            negate = true;
            tok.erase(0, 1);
        }
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error::invalid("Gram matrix: bad entry '" + tok + "'");
        }
        if (v < 0 || v >= ring.order())
            throw Error::invalid("Gram matrix: entry code " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(ring.order() - 1));
        row.push_back(negate ? ring.neg(v) : v);
    };
    for (char c : text) {
        if (c == ',') {
            flush_cell();
        } else if (c == ';') {
            flush_cell();
            rows.push_back(row);
            row.clear();
        } else {
            cell.push_back(c);
        }
    }
    flush_cell();
    rows.push_back(row);
    return Gram(ring, std::move(rows));
}

std::string Gram::to_string() const {
    std::string s;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ";";
        for (size_t j = 0; j < entries_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(entries_[i][j]);
        }
    }
    return s;
}

Module::Module(Ring ring, int dim) : ring_(std::move(ring)), dim_(dim) {
    if (dim < 1) throw Error::invalid("module dimension must be >= 1");
    count_ = 1;
    for (int i = 0; i < dim; ++i) {
        count_ *= ring_.order();
        if (count_ > (1LL << 40)) throw Error::limit("module too large");
    }
}

Vec Module::add(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = ring_.add(x[i], y[i]);
    return r;
}

Vec Module::scale(int c, const Vec& x) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = ring_.mul(c, x[i]);
    return r;
}

Vec Module::negate(const Vec& x) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = ring_.neg(x[i]);
    return r;
}

int Module::bilinear(const Gram& a, const Vec& x, const Vec& y) const {
    if (a.dim() != dim_ || static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw Error::invalid("bilinear form: dimension mismatch");
    int s = 0;
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            s = ring_.add(s, ring_.mul(x[i], ring_.mul(a.at(i, j), y[j])));
    }
    return s;
}

int Module::index_of(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw Error::invalid("index_of: dimension mismatch");
    long long idx = 0;
    for (int i = dim_ - 1; i >= 0; --i) {
        if (x[i] < 0 || x[i] >= ring_.order()) throw Error::invalid("index_of: coordinate out of range");
        idx = idx * ring_.order() + x[i];
    }
    return static_cast<int>(idx + 1);
}

Vec Module::vector_of(long long index) const {
    if (index < 1 || index > count_)
        throw Error::invalid("vector_of: index " + std::to_string(index) + " out of range 1.." +
                             std::to_string(count_));
    long long i = index - 1;
    Vec x(dim_);
    for (int k = 0; k < dim_; ++k) {
        x[k] = static_cast<int>(i % ring_.order());
        i /= ring_.order();
    }
    return x;
}

} // namespace symq
