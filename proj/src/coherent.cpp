#include "thetakit/coherent.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace thetakit {

namespace {

std::uint64_t pack(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

int count_colors(const std::vector<int>& colors) {
    return *std::max_element(colors.begin(), colors.end()) + 1;
}

// Remap colors to: diagonal classes first (by first occurrence along the
// diagonal), then off-diagonal classes by row-major first occurrence.
std::vector<int> canonicalize(const std::vector<int>& colors, int n) {
    std::vector<int> remap(count_colors(colors), -1);
    int next = 0;
    for (int u = 0; u < n; ++u) {
        const int c = colors[static_cast<std::size_t>(u) * n + u];
        if (remap[c] < 0) remap[c] = next++;
    }
    for (const int c : colors)
        if (remap[c] < 0) remap[c] = next++;
    std::vector<int> out(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) out[i] = remap[colors[i]];
    return out;
}

} // namespace

std::vector<int> wl_refine_once(const std::vector<int>& colors, int n) {
    std::vector<std::uint64_t> sig(n);
    std::map<std::pair<int, std::vector<std::uint64_t>>, int> table;
    std::vector<int> out(colors.size());
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w)
                sig[w] = pack(colors[static_cast<std::size_t>(u) * n + w],
                              colors[static_cast<std::size_t>(w) * n + v]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(colors[static_cast<std::size_t>(u) * n + v], sig);
            auto [it, inserted] = table.try_emplace(std::move(key), static_cast<int>(table.size()));
            out[static_cast<std::size_t>(u) * n + v] = it->second;
        }
    }
    return out;
}

CoherentConfiguration wl_closure(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw std::invalid_argument("wl_closure: vertex count exceeds cap");

    std::vector<int> colors(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            colors[static_cast<std::size_t>(u) * n + v] = (u == v) ? 0 : (g.has_edge(u, v) ? 1 : 2);

    // Initial colors may be fewer than three (K1, K_n, empty graph).
    colors = canonicalize(colors, n);
    int num = count_colors(colors);
    while (true) {
        std::vector<int> refined = wl_refine_once(colors, n);
        const int refined_num = count_colors(refined);
        if (refined_num == num) break;
        colors = std::move(refined);
        num = refined_num;
    }
    colors = canonicalize(colors, n);

    CoherentConfiguration out;
    out.n_ = n;
    out.color_ = colors;
    out.patterns_.assign(num, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0));
    for (std::size_t i = 0; i < colors.size(); ++i) out.patterns_[colors[i]][i] = 1;
    for (auto [u, v] : g.edges()) {
        out.graph_classes_.insert(out.color(u, v));
        out.graph_classes_.insert(out.color(v, u));
    }
    out.detect_identity();

    const AxiomReport rep = check_coherent_axioms(out);
    if (!rep.all())
        throw std::logic_error("wl_closure: output failed axiom check: " +
                               rep.witness.value_or("unknown"));
    return out;
}

CoherentConfiguration CoherentConfiguration::from_matrices(const std::vector<QMatrix>& classes) {
    if (classes.empty()) throw std::invalid_argument("from_matrices: empty class list");
    const int n = classes.front().n();
    CoherentConfiguration out;
    out.n_ = n;
    out.color_.assign(static_cast<std::size_t>(n) * n, -1);
    for (const QMatrix& m : classes) {
        if (m.n() != n) throw std::invalid_argument("from_matrices: dimension mismatch");
        std::vector<std::uint8_t> pat(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const mpq_class& x = m(i, j);
                if (x != 0 && x != 1)
                    throw std::invalid_argument("from_matrices: classes must be 0/1 matrices");
                if (x == 1) {
                    pat[static_cast<std::size_t>(i) * n + j] = 1;
                    // First covering class wins; overlap shows up in axiom (i).
                    auto& cell = out.color_[static_cast<std::size_t>(i) * n + j];
                    if (cell < 0) cell = static_cast<int>(out.patterns_.size());
                }
            }
        out.patterns_.push_back(std::move(pat));
    }
    out.detect_identity();
    return out;
}

QMatrix CoherentConfiguration::class_matrix(int k) const {
    QMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (class_contains(k, i, j)) m(i, j) = 1;
    return m;
}

bool CoherentConfiguration::detect_identity() {
    identity_index_.reset();
    for (int k = 0; k < num_classes(); ++k) {
        bool is_identity = true;
        for (int i = 0; i < n_ && is_identity; ++i)
            for (int j = 0; j < n_; ++j)
                if (class_contains(k, i, j) != (i == j)) {
                    is_identity = false;
                    break;
                }
        if (is_identity) {
            identity_index_ = k;
            return true;
        }
    }
    return false;
}

bool is_homogeneous(CoherentConfiguration& c) { return c.detect_identity(); }

AxiomReport check_coherent_axioms(const CoherentConfiguration& c) {
    AxiomReport rep;
    const int n = c.n();
    const int num = c.num_classes();
    auto fail = [&](const std::string& w) {
        if (!rep.witness) rep.witness = w;
    };

    // (i) every cell covered exactly once
    rep.sum_is_J = true;
    std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
    for (int k = 0; k < num; ++k) {
        const auto& pat = c.class_pattern(k);
        for (std::size_t i = 0; i < pat.size(); ++i) cover[i] += pat[i];
    }
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (cover[i] != 1) {
            rep.sum_is_J = false;
            fail("axiom (i): cell (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                 ") covered " + std::to_string(cover[i]) + " times");
            break;
        }
    }

    // (ii) a class touching the diagonal must be diagonal
    rep.diagonal_split = true;
    for (int k = 0; k < num && rep.diagonal_split; ++k) {
        bool touches_diag = false;
        for (int i = 0; i < n; ++i)
            if (c.class_contains(k, i, i)) {
                touches_diag = true;
                break;
            }
        if (!touches_diag) continue;
        for (int i = 0; i < n && rep.diagonal_split; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && c.class_contains(k, i, j)) {
                    rep.diagonal_split = false;
                    fail("axiom (ii): class " + std::to_string(k) +
                         " has diagonal and off-diagonal cells");
                    break;
                }
    }

    // (iii) transpose of each class is a class
    rep.transpose_closed = true;
    std::map<std::vector<std::uint8_t>, int> by_pattern;
    for (int k = 0; k < num; ++k) by_pattern[c.class_pattern(k)] = k;
    for (int k = 0; k < num && rep.transpose_closed; ++k) {
        std::vector<std::uint8_t> tr(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                tr[static_cast<std::size_t>(j) * n + i] =
                    c.class_pattern(k)[static_cast<std::size_t>(i) * n + j];
        if (!by_pattern.count(tr)) {
            rep.transpose_closed = false;
            fail("axiom (iii): transpose of class " + std::to_string(k) + " is not a class");
        }
    }

    // (iv) A_i A_j constant on every class, zero outside the cover
    rep.products_in_span = rep.sum_is_J;
    if (!rep.sum_is_J)
        fail("axiom (iv): not checked, classes do not partition the cells");
    if (rep.products_in_span) {
        // Sparse row lists make the total product work O(n^3) across all
        // class pairs.
        std::vector<std::vector<std::vector<int>>> rows(num);
        for (int k = 0; k < num; ++k) {
            rows[k].assign(n, {});
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (c.class_contains(k, i, j)) rows[k][i].push_back(j);
        }
        std::vector<long long> prod(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < num && rep.products_in_span; ++a) {
            for (int b = 0; b < num && rep.products_in_span; ++b) {
                std::fill(prod.begin(), prod.end(), 0);
                for (int i = 0; i < n; ++i)
                    for (int m : rows[a][i])
                        for (int j : rows[b][m]) ++prod[static_cast<std::size_t>(i) * n + j];
                std::vector<long long> coeff(num, -1);
                for (int i = 0; i < n && rep.products_in_span; ++i)
                    for (int j = 0; j < n; ++j) {
                        const int k = c.color(i, j);
                        const long long v = prod[static_cast<std::size_t>(i) * n + j];
                        if (coeff[k] < 0) coeff[k] = v;
                        if (coeff[k] != v) {
                            rep.products_in_span = false;
                            fail("axiom (iv): A_" + std::to_string(a) + " A_" + std::to_string(b) +
                                 " not constant on class " + std::to_string(k) + " at cell (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
                            break;
                        }
                    }
            }
        }
    }
    return rep;
}

} // namespace thetakit
