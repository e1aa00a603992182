#include "sg/canonical.hpp"

#include <bit>
#include <cstring>

#include "sg/graph6.hpp"

namespace sg {

namespace {

constexpr int kMaxN = Graph::kMaxOrder;
constexpr int kMaxWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;

// Ordered partition of the vertex set.  Vertices live in order_[] grouped
// by cell; a cell is identified by its start offset (stable across splits
// since splits only subdivide ranges in place).
struct Part {
    std::uint8_t order_[kMaxN];
    std::uint8_t cend[kMaxN]; // valid at start offsets only
    std::uint64_t starts;
};

struct Ctx {
    int n = 0;
    const std::uint64_t* rows = nullptr;
    int nbits = 0;
    int nwords = 0;
    bool have_best = false;
    std::uint64_t best[kMaxWords];
    int best_label[kMaxN];
};

// Packs bit b (0 = most significant within its word) so that word-wise
// unsigned comparison is lexicographic comparison of the bit string.
inline void set_bit(std::uint64_t* words, int b, bool value) {
    if (value)
        words[b >> 6] |= std::uint64_t{1} << (63 - (b & 63));
}

// Compare the first `bits` bits: -1 / 0 / +1.
inline int compare_bits(const std::uint64_t* a, const std::uint64_t* b, int bits) {
    int full = bits >> 6;
    for (int w = 0; w < full; ++w) {
        if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
    }
    int rem = bits & 63;
    if (rem) {
        std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
        std::uint64_t x = a[full] & mask, y = b[full] & mask;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::uint64_t cell_mask(const Part& p, int s) {
    std::uint64_t m = 0;
    for (int i = s; i < p.cend[s]; ++i) m |= std::uint64_t{1} << p.order_[i];
    return m;
}

// Split every cell by edge counts into the splitter cell; newly created
// cells are queued as further splitters until the partition is equitable.
void refine(const Ctx& c, Part& p, std::uint64_t pending) {
    while (pending) {
        int s = std::countr_zero(pending);
        pending &= pending - 1;
        std::uint64_t smask = cell_mask(p, s);

        std::uint64_t cells = p.starts;
        while (cells) {
            int cs = std::countr_zero(cells);
            cells &= cells - 1;
            int ce = p.cend[cs];
            if (ce - cs < 2) continue;

            int key[kMaxN];
            int lo = kMaxN + 1, hi = -1;
            for (int i = cs; i < ce; ++i) {
                key[i] = std::popcount(c.rows[p.order_[i]] & smask);
                lo = std::min(lo, key[i]);
                hi = std::max(hi, key[i]);
            }
            if (lo == hi) continue;

            // stable counting sort of order_[cs..ce) by key ascending
            std::uint8_t tmp[kMaxN];
            int sorted_key[kMaxN];
            int cursor = cs;
            for (int k = lo; k <= hi; ++k)
                for (int i = cs; i < ce; ++i)
                    if (key[i] == k) {
                        tmp[cursor] = p.order_[i];
                        sorted_key[cursor] = k;
                        ++cursor;
                    }
            std::memcpy(p.order_ + cs, tmp + cs, static_cast<std::size_t>(ce - cs));

            int run_start = cs;
            for (int i = cs + 1; i <= ce; ++i) {
                if (i == ce || sorted_key[i] != sorted_key[run_start]) {
                    p.starts |= std::uint64_t{1} << run_start;
                    p.cend[run_start] = static_cast<std::uint8_t>(i);
                    pending |= std::uint64_t{1} << run_start;
                    run_start = i;
                }
            }
        }
    }
}

int leading_singletons(const Part& p, int n) {
    int k = 0;
    while (k < n && ((p.starts >> k) & 1u) && p.cend[k] == k + 1) ++k;
    return k;
}

// Bits among the first k fixed positions, packed for lex comparison.
int prefix_string(const Ctx& c, const Part& p, int k, std::uint64_t* words) {
    int nb = k * (k - 1) / 2;
    std::memset(words, 0, sizeof(std::uint64_t) * static_cast<std::size_t>((nb + 63) / 64));
    int b = 0;
    for (int j = 1; j < k; ++j) {
        std::uint64_t rj = c.rows[p.order_[j]];
        for (int i = 0; i < j; ++i, ++b)
            set_bit(words, b, (rj >> p.order_[i]) & 1u);
    }
    return nb;
}

void search(Ctx& c, const Part& p) {
    int k = leading_singletons(p, c.n);
    if (c.have_best && k >= 2) {
        std::uint64_t pref[kMaxWords];
        int nb = prefix_string(c, p, k, pref);
        if (compare_bits(pref, c.best, nb) > 0) return; // cannot beat best
    }

    if (k == c.n) {
        std::uint64_t full[kMaxWords];
        std::memset(full, 0, sizeof(std::uint64_t) * static_cast<std::size_t>(c.nwords));
        prefix_string(c, p, c.n, full);
        if (!c.have_best || compare_bits(full, c.best, c.nbits) < 0) {
            std::memcpy(c.best, full, sizeof(std::uint64_t) * static_cast<std::size_t>(c.nwords));
            for (int pos = 0; pos < c.n; ++pos) c.best_label[p.order_[pos]] = pos;
            c.have_best = true;
        }
        return;
    }

    // after k leading singletons the cell at offset k is the branching cell
    int s = k;
    int e = p.cend[s];

    for (int i = s; i < e; ++i) {
        int v = p.order_[i];
        // twins yield mirror-image subtrees; explore one representative
        bool dup = false;
        for (int j = s; j < i && !dup; ++j) {
            int u = p.order_[j];
            std::uint64_t diff = (c.rows[u] ^ c.rows[v]) &
                                 ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            dup = diff == 0;
        }
        if (dup) continue;

        Part q = p;
        std::swap(q.order_[s], q.order_[i]);
        q.cend[s] = static_cast<std::uint8_t>(s + 1);
        q.starts |= std::uint64_t{1} << (s + 1);
        q.cend[s + 1] = static_cast<std::uint8_t>(e);
        refine(c, q, (std::uint64_t{1} << s) | (std::uint64_t{1} << (s + 1)));
        search(c, q);
    }
}

void run_canonical(int n, const std::uint64_t* rows, Ctx& c) {
    c.n = n;
    c.rows = rows;
    c.nbits = n * (n - 1) / 2;
    c.nwords = (c.nbits + 63) / 64;
    c.have_best = false;

    Part p;
    for (int i = 0; i < n; ++i) p.order_[i] = static_cast<std::uint8_t>(i);
    p.starts = 1;
    p.cend[0] = static_cast<std::uint8_t>(n);
    refine(c, p, 1);
    search(c, p);
}

} // namespace

namespace detail {

void canonical_core(int n, const std::uint64_t* rows, std::uint64_t* out_rows,
                    int* labeling) {
    if (n == 1) {
        out_rows[0] = 0;
        labeling[0] = 0;
        return;
    }
    Ctx c;
    run_canonical(n, rows, c);
    for (int v = 0; v < n; ++v) labeling[v] = c.best_label[v];
    for (int v = 0; v < n; ++v) out_rows[v] = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = rows[v];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            out_rows[labeling[v]] |= std::uint64_t{1} << labeling[w];
        }
    }
}

SmallCanon canonical_small(int n, const std::uint64_t* rows) {
    std::uint64_t out_rows[kMaxN];
    int labeling[kMaxN];
    canonical_core(n, rows, out_rows, labeling);
    std::uint64_t key = 0;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((out_rows[j] >> i) & 1u) key |= std::uint64_t{1} << b;
    int last = 0;
    for (int v = 0; v < n; ++v)
        if (labeling[v] == n - 1) last = v;
    return {key, last};
}

} // namespace detail

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    std::uint64_t rows[kMaxN];
    std::uint64_t out_rows[kMaxN];
    int labeling[kMaxN];
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    detail::canonical_core(n, rows, out_rows, labeling);
    CanonicalForm result{Graph::from_rows(n, std::span<const std::uint64_t>(out_rows,
                                                                            static_cast<std::size_t>(n))),
                         std::vector<int>(labeling, labeling + n)};
    return result;
}

std::string canonical_key(const Graph& g) { return graph6_encode(canonical_form(g).graph); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

} // namespace sg
