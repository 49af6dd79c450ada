#include "cobord/dks.hpp"

#include <algorithm>
#include <unordered_set>

namespace cobord {

namespace {

constexpr int kMaxVars = 7;

std::uint64_t pack_deg(std::uint64_t term) { return term >> 56; }

std::uint64_t make_term_from_exponents(const int* exps, int nvars) {
    std::uint64_t term = 0;
    int deg = 0;
    for (int i = 0; i < nvars; ++i) {
        term |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
        deg += exps[i];
    }
    term |= static_cast<std::uint64_t>(deg) << 56;
    return term;
}

std::vector<std::uint64_t> normalize(std::vector<std::uint64_t> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<std::uint64_t> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

}  // namespace

MultiPoly::MultiPoly(int nvars, std::vector<std::uint64_t> terms) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw DimensionTooLarge("MultiPoly supports up to 7 variables");
    terms_ = normalize(std::move(terms));
}

MultiPoly MultiPoly::variable(int i, int nvars) {
    if (i < 1 || i > nvars) throw Error("variable index out of range");
    std::uint64_t term = (1ull << (8 * (i - 1))) | (1ull << 56);
    return MultiPoly(nvars, {term});
}

MultiPoly MultiPoly::from_linear_form(LinearForm f) {
    if (f.vec.is_zero()) throw ZeroFactor();
    std::vector<std::uint64_t> terms;
    for (int i = 1; i <= f.vec.dim(); ++i)
        if (f.vec.bit(i)) terms.push_back((1ull << (8 * (i - 1))) | (1ull << 56));
    return MultiPoly(f.vec.dim(), std::move(terms));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(pack_deg(terms_.back()));
}

int MultiPoly::exponent(std::uint64_t term, int var) {
    return static_cast<int>((term >> (8 * (var - 1))) & 0xff);
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw Error("adding polynomials in different variable counts");
    std::vector<std::uint64_t> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    merged.insert(merged.end(), terms_.begin(), terms_.end());
    merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
    return MultiPoly(nvars_, std::move(merged));
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw Error("multiplying polynomials in different variable counts");
    if (is_zero() || other.is_zero()) return zero(nvars_);
    if (total_degree() + other.total_degree() > 200)
        throw Error("product degree exceeds the packed representation");
    std::unordered_set<std::uint64_t> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (std::uint64_t a : terms_)
        for (std::uint64_t b : other.terms_) {
            // Byte-wise exponent addition; degrees stay below 256.
            const std::uint64_t t = a + b;
            auto [it, inserted] = acc.insert(t);
            if (!inserted) acc.erase(it);
        }
    std::vector<std::uint64_t> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end());
    MultiPoly r(nvars_);
    r.terms_ = std::move(out);
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_by(LinearForm f) const {
    if (f.vec.is_zero()) throw ZeroFactor();
    if (is_zero()) return zero(nvars_);
    if (f.vec.dim() != nvars_) throw Error("form has wrong variable count");

    // Eliminate the largest variable of the form; the divisor is monic in
    // it, so synthetic division applies with the remaining sum as "root".
    int k = 0;
    for (int i = nvars_; i >= 1; --i)
        if (f.vec.bit(i)) {
            k = i;
            break;
        }
    std::vector<std::uint64_t> rest_terms;
    for (int i = 1; i <= nvars_; ++i)
        if (i != k && f.vec.bit(i)) rest_terms.push_back((1ull << (8 * (i - 1))) | (1ull << 56));
    const MultiPoly rest(nvars_, std::move(rest_terms));

    // Coefficients of powers of x_k.
    int top = 0;
    for (std::uint64_t t : terms_) top = std::max(top, exponent(t, k));
    std::vector<MultiPoly> coeff(static_cast<std::size_t>(top + 1), zero(nvars_));
    {
        std::vector<std::vector<std::uint64_t>> buckets(static_cast<std::size_t>(top + 1));
        for (std::uint64_t t : terms_) {
            const int e = exponent(t, k);
            std::uint64_t stripped = t & ~(0xffull << (8 * (k - 1)));
            stripped -= static_cast<std::uint64_t>(e) << 56;
            buckets[static_cast<std::size_t>(e)].push_back(stripped);
        }
        for (int e = 0; e <= top; ++e)
            coeff[static_cast<std::size_t>(e)] =
                MultiPoly(nvars_, std::move(buckets[static_cast<std::size_t>(e)]));
    }

    // Horner: q_{d-1} = c_d + rest * q_d, remainder c_0 + rest * q_0.
    std::vector<MultiPoly> q(static_cast<std::size_t>(std::max(top, 1)), zero(nvars_));
    MultiPoly carry = zero(nvars_);
    for (int d = top; d >= 1; --d) {
        carry = coeff[static_cast<std::size_t>(d)] + rest * carry;
        q[static_cast<std::size_t>(d - 1)] = carry;
    }
    const MultiPoly remainder = coeff[0] + rest * carry;
    if (!remainder.is_zero()) return std::nullopt;

    std::vector<std::uint64_t> quot_terms;
    for (int d = 0; d < std::max(top, 1); ++d) {
        const std::uint64_t bump =
            (static_cast<std::uint64_t>(d) << (8 * (k - 1))) | (static_cast<std::uint64_t>(d) << 56);
        for (std::uint64_t t : q[static_cast<std::size_t>(d)].terms()) quot_terms.push_back(t + bump);
    }
    return MultiPoly(nvars_, std::move(quot_terms));
}

MultiPoly MultiPoly::substitute_variable(int var, const MultiPoly& value) const {
    int top = 0;
    for (std::uint64_t t : terms_) top = std::max(top, exponent(t, var));
    std::vector<MultiPoly> powers;
    powers.reserve(static_cast<std::size_t>(top + 1));
    powers.push_back(one(nvars_));
    for (int e = 1; e <= top; ++e) powers.push_back(powers.back() * value);

    MultiPoly acc = zero(nvars_);
    for (std::uint64_t t : terms_) {
        const int e = exponent(t, var);
        std::uint64_t stripped = t & ~(0xffull << (8 * (var - 1)));
        stripped -= static_cast<std::uint64_t>(e) << 56;
        acc = acc + MultiPoly(nvars_, {stripped}) * powers[static_cast<std::size_t>(e)];
    }
    return acc;
}

SymmetricFunction::SymmetricFunction(MultiPoly p, std::vector<int> partition)
    : poly_(std::move(p)), partition_(std::move(partition)) {
    // Adjacent transpositions generate the symmetric group.
    const int n = poly_.nvars();
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> swapped;
        swapped.reserve(poly_.term_count());
        for (std::uint64_t t : poly_.terms()) {
            const std::uint64_t a = (t >> (8 * (i - 1))) & 0xff;
            const std::uint64_t b = (t >> (8 * i)) & 0xff;
            std::uint64_t s = t & ~(0xffffull << (8 * (i - 1)));
            s |= b << (8 * (i - 1));
            s |= a << (8 * i);
            swapped.push_back(s);
        }
        if (MultiPoly(n, std::move(swapped)) != poly_)
            throw Error("polynomial is not symmetric");
    }
}

SymmetricFunction SymmetricFunction::constant_one(int nvars) {
    return SymmetricFunction(MultiPoly::one(nvars), {});
}

SymmetricFunction SymmetricFunction::elementary(int k, int nvars) {
    if (k < 0 || k > nvars) throw Error("elementary symmetric degree out of range");
    if (k == 0) return constant_one(nvars);
    std::vector<std::uint64_t> terms;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    auto recurse = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            terms.push_back(make_term_from_exponents(exps.data(), nvars));
            return;
        }
        for (int i = from; i <= nvars - left; ++i) {
            exps[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1, left - 1);
            exps[static_cast<std::size_t>(i)] = 0;
        }
    };
    recurse(recurse, 0, k);
    return SymmetricFunction(MultiPoly(nvars, std::move(terms)), std::vector<int>(static_cast<std::size_t>(k), 1));
}

SymmetricFunction SymmetricFunction::monomial(const std::vector<int>& partition, int nvars) {
    if (static_cast<int>(partition.size()) > nvars)
        throw Error("partition has more parts than variables");
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        if (partition[i] < partition[i + 1]) throw Error("partition must be weakly decreasing");
    if (!partition.empty() && partition.back() < 1) throw Error("partition parts must be positive");

    std::vector<int> exps(partition.begin(), partition.end());
    exps.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(exps.begin(), exps.end());
    std::vector<std::uint64_t> terms;
    do {
        terms.push_back(make_term_from_exponents(exps.data(), nvars));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return SymmetricFunction(MultiPoly(nvars, std::move(terms)), partition);
}

MultiPoly SymmetricFunction::evaluate(const std::vector<LinearForm>& forms) const {
    const int n = poly_.nvars();
    if (static_cast<int>(forms.size()) != n) throw Error("evaluation needs one form per variable");
    int top = 0;
    for (std::uint64_t t : poly_.terms())
        for (int i = 1; i <= n; ++i) top = std::max(top, MultiPoly::exponent(t, i));
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        powers[static_cast<std::size_t>(i)].push_back(MultiPoly::one(n));
        const MultiPoly base = MultiPoly::from_linear_form(forms[static_cast<std::size_t>(i)]);
        for (int e = 1; e <= top; ++e)
            powers[static_cast<std::size_t>(i)].push_back(
                powers[static_cast<std::size_t>(i)].back() * base);
    }
    MultiPoly acc = MultiPoly::zero(n);
    for (std::uint64_t t : poly_.terms()) {
        MultiPoly prod = MultiPoly::one(n);
        for (int i = 1; i <= n; ++i) {
            const int e = MultiPoly::exponent(t, i);
            if (e) prod = prod * powers[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e)];
        }
        acc = acc + prod;
    }
    return acc;
}

std::vector<LinearForm> euler_class(const Monomial& m) {
    if (m.side() != Side::character) throw SideMismatch();
    std::vector<LinearForm> forms;
    forms.reserve(m.factors().size());
    for (const auto& f : m.factors()) forms.push_back({f});
    return forms;
}

LocalizationResult localization_sum(const Polynomial& g, const SymmetricFunction& f) {
    if (!is_faithful(g)) throw NotFaithful();
    const int n = g.dim();
    if (f.poly().nvars() != n) throw Error("symmetric function has wrong variable count");

    const auto& monos = g.monomials();
    const std::size_t l = monos.size();
    std::vector<std::vector<LinearForm>> classes(l);
    std::vector<MultiPoly> chi(l, MultiPoly::one(n));
    for (std::size_t i = 0; i < l; ++i) {
        classes[i] = euler_class(monos[i]);
        for (const auto& form : classes[i]) chi[i] = chi[i] * MultiPoly::from_linear_form(form);
    }

    std::vector<MultiPoly> prefix(l + 1, MultiPoly::one(n));
    std::vector<MultiPoly> suffix(l + 1, MultiPoly::one(n));
    for (std::size_t i = 0; i < l; ++i) prefix[i + 1] = prefix[i] * chi[i];
    for (std::size_t i = l; i > 0; --i) suffix[i - 1] = suffix[i] * chi[i - 1];

    MultiPoly numerator = MultiPoly::zero(n);
    for (std::size_t i = 0; i < l; ++i)
        numerator = numerator + f.evaluate(classes[i]) * (prefix[i] * suffix[i + 1]);

    MultiPoly cur = numerator;
    for (std::size_t i = 0; i < l; ++i)
        for (const auto& form : classes[i]) {
            auto next = cur.divide_by(form);
            if (!next) return {std::nullopt, form};
            cur = std::move(*next);
        }
    return {cur, std::nullopt};
}

namespace {

void partitions_up_to(int total, int max_part, std::vector<int>& cur, int max_parts,
                      std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_up_to(total - p, p, cur, max_parts, out);
        cur.pop_back();
    }
}

}  // namespace

DksReport check_up_to_degree(const Polynomial& g, int max_degree) {
    if (!is_faithful(g)) throw NotFaithful();
    const int n = g.dim();
    std::vector<std::vector<int>> mus;
    std::vector<int> cur;
    partitions_up_to(max_degree, max_degree, cur, n, mus);
    std::sort(mus.begin(), mus.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        return std::tie(da, a) < std::tie(db, b);
    });

    DksReport report{max_degree, {}, false};
    for (const auto& mu : mus) {
        const auto f = SymmetricFunction::monomial(mu, n);
        const auto result = localization_sum(g, f);
        const bool ok = result.quotient.has_value();
        report.results.push_back({mu, ok});
        if (!ok) report.certified_nonmember = true;
    }
    return report;
}

}  // namespace cobord
