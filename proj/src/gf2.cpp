#include "cobord/gf2.hpp"

#include <array>
#include <bit>

namespace cobord {

BitVec::BitVec(std::uint32_t encoding, int dim) : bits_(encoding), dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        throw DimensionTooLarge("vector dimension must be in 1.." + std::to_string(kMaxDim));
    if (encoding >> dim)
        throw Error("encoding has bits beyond the dimension");
}

BitVec BitVec::unit(int i, int dim) {
    if (i < 1 || i > dim) throw Error("unit vector index out of range");
    return BitVec(1u << (i - 1), dim);
}

BitVec BitVec::from_bits(std::string_view text) {
    if (text.empty() || text.size() > kMaxDim) throw Error("bad bitstring length");
    std::uint32_t enc = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            enc |= 1u << i;
        else if (text[i] != '0')
            throw Error("bitstring may contain only 0 and 1");
    }
    return BitVec(enc, static_cast<int>(text.size()));
}

BitVec BitVec::operator+(BitVec other) const {
    if (dim_ != other.dim_) throw Error("adding vectors of different dimensions");
    BitVec r;
    r.bits_ = bits_ ^ other.bits_;
    r.dim_ = dim_;
    return r;
}

bool BitVec::dot(BitVec other) const {
    if (dim_ != other.dim_) throw Error("pairing vectors of different dimensions");
    return std::popcount(bits_ & other.bits_) & 1;
}

std::string BitVec::to_bits() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 1; i <= dim_; ++i)
        if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) return;
    dim_ = rows_.front().dim();
    for (const auto& r : rows_)
        if (r.dim() != dim_) throw Error("matrix rows have mixed dimensions");
}

BitMatrix BitMatrix::identity(int n) {
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) rows.push_back(BitVec::unit(i, n));
    return BitMatrix(std::move(rows));
}

int rank(const BitMatrix& m) {
    std::array<std::uint32_t, 64> work{};
    const int nrows = m.rows();
    if (nrows > 64) throw Error("too many rows");
    for (int i = 0; i < nrows; ++i) work[static_cast<std::size_t>(i)] = m.row(i).encoding();

    int r = 0;
    for (int col = 0; col < m.dim() && r < nrows; ++col) {
        const std::uint32_t mask = 1u << col;
        int pivot = -1;
        for (int i = r; i < nrows; ++i)
            if (work[static_cast<std::size_t>(i)] & mask) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(r)]);
        for (int i = 0; i < nrows; ++i)
            if (i != r && (work[static_cast<std::size_t>(i)] & mask))
                work[static_cast<std::size_t>(i)] ^= work[static_cast<std::size_t>(r)];
        ++r;
    }
    return r;
}

BitMatrix transpose(const BitMatrix& m) {
    const int n = m.dim();
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        std::uint32_t enc = 0;
        for (int i = 0; i < m.rows(); ++i)
            if (m.row(i).bit(j)) enc |= 1u << i;
        rows.push_back(BitVec(enc, m.rows()));
    }
    return BitMatrix(std::move(rows));
}

BitMatrix invert(const BitMatrix& m) {
    const int n = m.dim();
    if (m.rows() != n) throw SingularMatrix();

    // Gauss-Jordan on [A | I], both halves packed in one word.
    std::vector<std::uint64_t> work(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        work[static_cast<std::size_t>(i)] =
            static_cast<std::uint64_t>(m.row(i).encoding()) | (1ull << (n + i));

    int r = 0;
    for (int col = 0; col < n; ++col) {
        const std::uint64_t mask = 1ull << col;
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (work[static_cast<std::size_t>(i)] & mask) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrix();
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(r)]);
        for (int i = 0; i < n; ++i)
            if (i != r && (work[static_cast<std::size_t>(i)] & mask))
                work[static_cast<std::size_t>(i)] ^= work[static_cast<std::size_t>(r)];
        ++r;
    }

    std::vector<BitVec> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // After elimination row i has pivot in column i.
        const std::uint32_t inv = static_cast<std::uint32_t>(work[static_cast<std::size_t>(i)] >> n);
        rows[static_cast<std::size_t>(i)] = BitVec(inv, n);
    }
    return BitMatrix(std::move(rows));
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.dim() != b.rows()) throw Error("matrix product dimension mismatch");
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        std::uint32_t enc = 0;
        for (int k = 1; k <= a.dim(); ++k)
            if (a.row(i).bit(k)) enc ^= b.row(k - 1).encoding();
        rows.push_back(BitVec(enc, b.dim()));
    }
    return BitMatrix(std::move(rows));
}

BitVec apply(const BitMatrix& m, BitVec v) {
    if (m.dim() != v.dim()) throw Error("matrix-vector dimension mismatch");
    std::uint32_t enc = 0;
    for (int i = 0; i < m.rows(); ++i)
        if (m.row(i).dot(v)) enc |= 1u << i;
    return BitVec(enc, m.rows());
}

BitMatrix dual_basis(const BitMatrix& m) {
    if (m.rows() != m.dim() || rank(m) != m.dim()) throw NotABasis();
    return transpose(invert(m));
}

namespace {

void basis_recurse(int n, std::vector<BitVec>& chosen, std::vector<std::uint32_t>& span,
                   const std::function<bool(const BitMatrix&)>& visit, bool& keep_going) {
    if (!keep_going) return;
    if (static_cast<int>(chosen.size()) == n) {
        keep_going = visit(BitMatrix(chosen));
        return;
    }
    const std::uint32_t limit = 1u << n;
    std::uint64_t span_mask = 0;
    for (std::uint32_t s : span) span_mask |= 1ull << s;
    for (std::uint32_t v = 1; v < limit && keep_going; ++v) {
        if (span_mask & (1ull << v)) continue;
        chosen.push_back(BitVec(v, n));
        const std::size_t old = span.size();
        for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ v);
        basis_recurse(n, chosen, span, visit, keep_going);
        span.resize(old);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_ordered_basis(int n, const std::function<bool(const BitMatrix&)>& visit) {
    if (n < 1) throw Error("dimension must be positive");
    if (n > 5) throw DimensionTooLarge("ordered-basis enumeration is capped at n = 5");
    std::vector<BitVec> chosen;
    chosen.reserve(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> span{0};
    bool keep_going = true;
    basis_recurse(n, chosen, span, visit, keep_going);
}

std::vector<BitMatrix> enumerate_ordered_bases(int n) {
    std::vector<BitMatrix> out;
    for_each_ordered_basis(n, [&](const BitMatrix& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace cobord
