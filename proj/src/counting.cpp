#include "ahg/counting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace ahg {
namespace {

constexpr long long kModulusLimit = 1LL << 31;

long long to_machine(const Int& v, const char* what) {
    if (v < 0 || v > kModulusLimit)
        throw CapExceeded(std::string(what) + " does not fit the counting kernels");
    return static_cast<long long>(v);
}

std::vector<long long> decode_digits(const FlatMap& m, long long index) {
    std::vector<long long> digits(m.cols, 0);
    for (int j = m.cols - 1; j >= 0; --j) {
        digits[j] = index % m.src_moduli[j];
        index /= m.src_moduli[j];
    }
    return digits;
}

std::vector<long long> row_values(const FlatMap& m, const std::vector<long long>& digits) {
    std::vector<long long> vals(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        long long acc = 0;
        for (int j = 0; j < m.cols; ++j)
            acc = (acc + m.mat[static_cast<std::size_t>(r) * m.cols + j] * digits[j]) % m.tgt_moduli[r];
        vals[r] = acc;
    }
    return vals;
}

bool all_zero(const std::vector<long long>& vals) {
    for (long long v : vals)
        if (v != 0) return false;
    return true;
}

/// Count kernel tuples in the index range [begin, end) with an odometer.
long long count_range(const FlatMap& m, long long begin, long long end,
                      const std::vector<std::vector<long long>>& wrap) {
    std::vector<long long> digits = decode_digits(m, begin);
    std::vector<long long> vals = row_values(m, digits);
    long long count = 0;
    for (long long index = begin; index < end; ++index) {
        if (all_zero(vals)) ++count;
        if (index + 1 == end) break;
        // advance the least significant digit, carrying as needed
        for (int j = m.cols - 1; j >= 0; --j) {
            ++digits[j];
            for (int r = 0; r < m.rows; ++r) {
                vals[r] += m.mat[static_cast<std::size_t>(r) * m.cols + j];
                if (vals[r] >= m.tgt_moduli[r]) vals[r] -= m.tgt_moduli[r];
            }
            if (digits[j] < m.src_moduli[j]) break;
            digits[j] = 0;
            for (int r = 0; r < m.rows; ++r) {
                vals[r] -= wrap[j][r];
                if (vals[r] < 0) vals[r] += m.tgt_moduli[r];
            }
        }
    }
    return count;
}

std::vector<std::vector<long long>> wrap_columns(const FlatMap& m) {
    // wrap[j][r]: the residue of src_moduli[j] copies of column j in row r
    std::vector<std::vector<long long>> wrap(m.cols, std::vector<long long>(m.rows, 0));
    for (int j = 0; j < m.cols; ++j)
        for (int r = 0; r < m.rows; ++r)
            wrap[j][r] = (m.mat[static_cast<std::size_t>(r) * m.cols + j] % m.tgt_moduli[r]) *
                         (m.src_moduli[j] % m.tgt_moduli[r]) % m.tgt_moduli[r];
    return wrap;
}

} // namespace

FlatMap FlatMap::from(const HomComplex& h, int p) {
    const CochainSpace& src = h.cochain_space(p);
    const CochainSpace& tgt = h.cochain_space(p + 1);
    IntMatrix d = h.delta_matrix(p);
    FlatMap m;
    m.rows = static_cast<int>(tgt.moduli.size());
    m.cols = static_cast<int>(src.moduli.size());
    m.mat.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    m.src_moduli.reserve(m.cols);
    m.tgt_moduli.reserve(m.rows);
    for (const Int& v : src.moduli) m.src_moduli.push_back(to_machine(v, "source modulus"));
    for (const Int& v : tgt.moduli) m.tgt_moduli.push_back(to_machine(v, "target modulus"));
    for (int r = 0; r < m.rows; ++r)
        for (int j = 0; j < m.cols; ++j)
            m.mat[static_cast<std::size_t>(r) * m.cols + j] =
                to_machine(mod_floor(d.at(r, j), Int(m.tgt_moduli[r])), "matrix entry");
    return m;
}

Int FlatMap::domain_size() const {
    Int total = 1;
    for (long long v : src_moduli) total *= v;
    return total;
}

long long count_kernel_reference(const FlatMap& m) {
    Int total_big = m.domain_size();
    long long total = to_machine(total_big, "domain size");
    long long count = 0;
    for (long long index = 0; index < total; ++index) {
        std::vector<long long> digits = decode_digits(m, index);
        if (all_zero(row_values(m, digits))) ++count;
    }
    return count;
}

long long count_kernel_parallel(const FlatMap& m) {
    Int total_big = m.domain_size();
    long long total = to_machine(total_big, "domain size");
    if (total == 0) return 0;
    std::vector<std::vector<long long>> wrap = wrap_columns(m);
    int threads = 1;
#ifdef _OPENMP
    threads = std::max(1, omp_get_max_threads());
#endif
    long long chunks = std::min<long long>(total, 8LL * threads);
    long long size = (total + chunks - 1) / chunks;
    long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (long long c = 0; c < chunks; ++c) {
        long long begin = c * size;
        long long end = std::min(total, begin + size);
        if (begin < end) count += count_range(m, begin, end, wrap);
    }
    return count;
}

CountingReport counting_gsd(const HomComplex& h, const Int& max_count, bool parallel) {
    CountingReport rep;
    rep.hom0 = h.cochain_space(0).order();
    rep.homm1 = h.cochain_space(-1).order();
    if (rep.hom0 > max_count)
        throw CapExceeded("counting_gsd: |hom^0| = " + rep.hom0.str() + " exceeds the cap " +
                          max_count.str());
    if (rep.homm1 > max_count)
        throw CapExceeded("counting_gsd: |hom^-1| = " + rep.homm1.str() + " exceeds the cap " +
                          max_count.str());
    FlatMap d0 = FlatMap::from(h, 0);
    FlatMap dm1 = FlatMap::from(h, -1);
    rep.ker_d0 = parallel ? count_kernel_parallel(d0) : count_kernel_reference(d0);
    rep.ker_dm1 = parallel ? count_kernel_parallel(dm1) : count_kernel_reference(dm1);
    Int product = rep.ker_d0 * rep.ker_dm1;
    if (product % rep.homm1 != 0)
        throw std::logic_error("counting_gsd: kernel product is not divisible by |hom^-1|");
    rep.gsd = product / rep.homm1;
    return rep;
}

} // namespace ahg
