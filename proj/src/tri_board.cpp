#include "trispectra/tri_board.hpp"

#include <sstream>
#include <stdexcept>

namespace trispectra {

long long tri_number(long long n) {
    if (n < 0) throw std::invalid_argument("tri_number: n must be >= 0");
    return n * (n + 1) / 2;
}

long long coord_label(const TriCoord& c) {
    if (!c.valid()) {
        throw std::out_of_range("coord_label: invalid cell (" + std::to_string(c.i) + "," +
                                std::to_string(c.j) + ") on board of side " + std::to_string(c.n));
    }
    return tri_number(c.i - 1) + c.j;
}

TriCoord label_to_coord(long long label, int n) {
    if (label < 1 || label > tri_number(n)) {
        throw std::out_of_range("label_to_coord: label " + std::to_string(label) +
                                " outside [1, T(" + std::to_string(n) + ")]");
    }
    int i = 1;
    while (tri_number(i) < label) ++i;
    int j = static_cast<int>(label - tri_number(i - 1));
    return TriCoord{i, j, n};
}

TriVector::TriVector(int n, std::vector<Int> entries) : n_(n), entries_(std::move(entries)) {
    if (static_cast<long long>(entries_.size()) != tri_number(n)) {
        throw std::invalid_argument("TriVector: expected " + std::to_string(tri_number(n)) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
}

size_t TriVector::offset(int i, int j) const {
    TriCoord c{i, j, n_};
    return static_cast<size_t>(coord_label(c) - 1);
}

const Int& TriVector::at_label(long long label) const {
    if (label < 1 || label > size()) throw std::out_of_range("TriVector: label out of range");
    return entries_[static_cast<size_t>(label - 1)];
}

bool TriVector::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

TriVector& TriVector::operator+=(const TriVector& other) {
    if (n_ != other.n_) throw std::invalid_argument("TriVector: size mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

TriVector& TriVector::operator-=(const TriVector& other) {
    if (n_ != other.n_) throw std::invalid_argument("TriVector: size mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

TriVector& TriVector::operator*=(const Int& scalar) {
    for (Int& e : entries_) e *= scalar;
    return *this;
}

TriVector rotate_pos(const TriVector& v) {
    const int n = v.n();
    TriVector w(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) w(i, j) = v(n - i + j, n - i + 1);
    return w;
}

TriVector rotate_neg(const TriVector& v) {
    // The source cell is (n-j+1, i-j+1); this is the inverse of rotate_pos and
    // matches the worked rotation example, unlike the (n-i+1, i-j+1) variant.
    const int n = v.n();
    TriVector w(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) w(i, j) = v(n - j + 1, i - j + 1);
    return w;
}

TriVector rcd_vector(LineKind kind, int n, int index) {
    if (n < 1) throw std::invalid_argument("rcd_vector: n must be >= 1");
    const bool diag = kind == LineKind::Diag;
    if (diag ? (index < 0 || index > n - 1) : (index < 1 || index > n)) {
        throw std::out_of_range("rcd_vector: line index " + std::to_string(index) +
                                " out of range for n=" + std::to_string(n));
    }
    TriVector v(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const int line = kind == LineKind::Row ? i : kind == LineKind::Col ? j : i - j;
            if (line == index) v(i, j) = 1;
        }
    }
    return v;
}

SumVectors sum_vectors(const TriVector& v) {
    const int n = v.n();
    SumVectors s;
    s.by_row.assign(n, Int(0));
    s.by_col.assign(n, Int(0));
    s.by_diag.assign(n, Int(0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const Int& e = v(i, j);
            s.by_row[i - 1] += e;
            s.by_col[j - 1] += e;
            s.by_diag[i - j] += e;
        }
    }
    return s;
}

namespace {

long long to_int64(const Int& x, const char* what) {
    if (!x.fits_slong_p()) throw std::range_error(std::string(what) + ": entry exceeds 64-bit range");
    return x.get_si();
}

}  // namespace

nlohmann::ordered_json to_json(const TriVector& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n();
    auto& arr = j["entries"] = nlohmann::ordered_json::array();
    for (const Int& e : v.entries()) arr.push_back(to_int64(e, "TriVector json"));
    return j;
}

TriVector tri_vector_from_json(const nlohmann::ordered_json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Int> entries;
    for (const auto& e : j.at("entries")) entries.push_back(make_int(e.get<long long>()));
    return TriVector(n, std::move(entries));
}

std::string render_triangle(const TriVector& v) {
    const int n = v.n();
    size_t width = 1;
    for (const Int& e : v.entries()) width = std::max(width, e.get_str().size());
    std::ostringstream out;
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < n - i; ++k) out << std::string((width + 1) / 2, ' ');
        for (int j = 1; j <= i; ++j) {
            std::string s = v(i, j).get_str();
            out << std::string(width - s.size(), ' ') << s;
            if (j < i) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace trispectra
