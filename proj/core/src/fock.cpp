#include "hilb/fock.hpp"

#include <algorithm>

namespace hilb {

bool fock_merge(const FrobeniusAlgebra& h, const FockMonomial& a, const FockMonomial& b,
                FockMonomial& out, int& sign) {
    out.parts.clear();
    out.parts.reserve(a.parts.size() + b.parts.size());
    sign = 1;
    int odd_left_in_a = 0;
    for (const auto& p : a.parts) odd_left_in_a += h.parity(p.color);
    size_t i = 0, j = 0;
    while (i < a.parts.size() && j < b.parts.size()) {
        const FockPart& pa = a.parts[i];
        const FockPart& pb = b.parts[j];
        if (pa == pb && h.parity(pa.color)) return false; // repeated odd part
        if (part_before(pb, pa)) {
            // pb jumps over every remaining part of a
            if (h.parity(pb.color) && (odd_left_in_a & 1)) sign = -sign;
            out.parts.push_back(pb);
            ++j;
        } else {
            odd_left_in_a -= h.parity(pa.color);
            out.parts.push_back(pa);
            ++i;
        }
    }
    while (i < a.parts.size()) out.parts.push_back(a.parts[i++]);
    while (j < b.parts.size()) out.parts.push_back(b.parts[j++]);
    return true;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = std::min(remaining, maxpart); m >= 1; --m) {
        cur.push_back(m);
        gen_partitions(remaining - m, m, cur, out);
        cur.pop_back();
    }
}

void assign_colors(const FrobeniusAlgebra& h, const std::vector<int>& shape, size_t pos,
                   FockMonomial& cur, std::vector<FockMonomial>& out) {
    if (pos == shape.size()) {
        out.push_back(cur);
        return;
    }
    int min_color = 0;
    if (pos > 0 && shape[pos] == shape[pos - 1]) {
        int prev = cur.parts[pos - 1].color;
        min_color = prev + (h.parity(prev) ? 1 : 0);
    }
    for (int c = min_color; c < h.dim; ++c) {
        cur.parts.push_back({shape[pos], c});
        assign_colors(h, shape, pos + 1, cur, out);
        cur.parts.pop_back();
    }
}

} // namespace

std::vector<FockMonomial> enumerate_basis(const FrobeniusAlgebra& h, int n) {
    if (n < 0) throw input_error("negative weight");
    if (n == 0) return {FockMonomial{}};
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    gen_partitions(n, n, cur, shapes);
    std::sort(shapes.begin(), shapes.end());
    std::vector<FockMonomial> out;
    for (const auto& shape : shapes) {
        FockMonomial mono;
        assign_colors(h, shape, 0, mono, out);
    }
    return out;
}

mpz_class fock_dimension(const FrobeniusAlgebra& h, int n) {
    if (n < 0) throw input_error("negative weight");
    int b_even = 0, b_odd = 0;
    for (int c = 0; c < h.dim; ++c) (h.parity(c) ? b_odd : b_even)++;
    std::vector<mpz_class> f(n + 1, 0);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int r = 0; r < b_odd; ++r)
            for (int i = n; i >= m; --i) f[i] += f[i - m];
        for (int r = 0; r < b_even; ++r)
            for (int i = m; i <= n; ++i) f[i] += f[i - m];
    }
    return f[n];
}

} // namespace hilb
