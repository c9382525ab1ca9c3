#include "coconvex/detail/double_description.hpp"

#include "coconvex/error.hpp"
#include "coconvex/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace coconvex::detail {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    std::vector<Integer> v;
    Bits zero;  // processed rows on which the ray is tight
};

Integer eval(const std::vector<Integer>& row, const std::vector<Integer>& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
    return s;
}

}  // namespace

std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>>& rows, std::size_t d) {
    const RatMatrix rat = to_rational(rows);
    const auto basis_rows = independent_rows(rat);
    if (basis_rows.size() != d) throw Error(ErrorKind::InvalidInput, "double description needs a pointed cone");

    // Initial simplicial cone: the columns of B⁻¹ for the chosen basis rows B.
    RatMatrix b;
    for (auto i : basis_rows) b.push_back(rat[i]);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        RatVector e(d, Rational(0));
        e[j] = 1;
        auto x = solve(b, e);
        Ray r{integral_direction(*x), Bits(rows.size())};
        for (std::size_t k = 0; k < d; ++k)
            if (k != j) r.zero.set(basis_rows[k]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(rows.size(), false);
    for (auto i : basis_rows) processed[i] = true;

    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (processed[t]) continue;
        processed[t] = true;
        const auto& row = rows[t];
        std::vector<Integer> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) val[i] = eval(row, rays[i].v);

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] >= 0) {
                Ray r = rays[i];
                if (val[i] == 0) r.zero.set(t);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                Bits common = rays[p].zero & rays[q].zero;
                if (d >= 2 && common.count() < d - 2) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                std::vector<Integer> v(d);
                for (std::size_t k = 0; k < d; ++k) v[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
                Ray nr{primitive(std::move(v)), common};
                nr.zero.set(t);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<std::vector<Integer>> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace coconvex::detail
