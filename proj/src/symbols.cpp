#include "sigma45/symbols.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace sigma45 {
namespace symtab {

namespace {

constexpr int kUW[7] = {0, 11, 7, 6, 3, 2, 1};

struct Entry {
    Indices idx;
    int32_t weight;
    int32_t val;
    int32_t twos;
};

struct VecHash {
    size_t operator()(const Indices& v) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t b : v) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Append-only two-level store: writers take the mutex, readers are lock-free
// via acquire loads of the block pointers.
constexpr size_t kBlockBits = 12;
constexpr size_t kBlockSize = size_t(1) << kBlockBits;
constexpr size_t kMaxBlocks = 1 << 12;

struct Table {
    std::mutex mu;
    std::unordered_map<Indices, SymId, VecHash> ids;
    std::atomic<Entry*> blocks[kMaxBlocks] = {};
    std::atomic<uint32_t> count{0};

    Table() { intern({}); }

    const Entry& entry(SymId s) const {
        return blocks[s >> kBlockBits].load(std::memory_order_acquire)[s & (kBlockSize - 1)];
    }

    SymId intern(Indices idx) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = ids.find(idx);
        if (it != ids.end()) return it->second;
        uint32_t id = count.load(std::memory_order_relaxed);
        size_t bi = id >> kBlockBits;
        if (bi >= kMaxBlocks) throw std::length_error("symbol table full");
        Entry* blk = blocks[bi].load(std::memory_order_relaxed);
        if (!blk) {
            blk = new Entry[kBlockSize];
            blocks[bi].store(blk, std::memory_order_release);
        }
        Entry& e = blk[id & (kBlockSize - 1)];
        e.val = 0;
        e.twos = 0;
        for (uint8_t i : idx) {
            if (i < 1 || i > 6) throw std::invalid_argument("symbol index out of range");
            e.val += kUW[i];
            if (i == 2) e.twos++;
        }
        e.weight = 15 - e.val;
        e.idx = idx;
        ids.emplace(std::move(idx), id);
        count.store(id + 1, std::memory_order_release);
        return id;
    }
};

Table& tab() {
    static Table t;
    return t;
}

} // namespace

SymId intern(Indices idx) {
    if (!std::is_sorted(idx.begin(), idx.end())) std::sort(idx.begin(), idx.end());
    return tab().intern(std::move(idx));
}

SymId shift(SymId s, const Indices& J) {
    if (J.empty()) return s;
    Indices v = indices(s);
    v.insert(v.end(), J.begin(), J.end());
    std::sort(v.begin(), v.end());
    return tab().intern(std::move(v));
}

SymId shift(SymId s, int index1to6) { return shift(s, Indices{uint8_t(index1to6)}); }

const Indices& indices(SymId s) { return tab().entry(s).idx; }
int weight(SymId s) { return tab().entry(s).weight; }
int valuation(SymId s) { return tab().entry(s).val; }
int count(SymId s) { return int(tab().entry(s).idx.size()); }
int twos(SymId s) { return tab().entry(s).twos; }

static int cmp_desclex(const Indices& a, const Indices& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        uint8_t xa = a[a.size() - 1 - k], xb = b[b.size() - 1 - k];
        if (xa != xb) return xa > xb ? 1 : -1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
    return 0;
}

int cmp_strata(SymId a, SymId b) {
    if (a == b) return 0;
    const auto& t = tab();
    const auto& ea = t.entry(a);
    const auto& eb = t.entry(b);
    if (ea.idx.size() != eb.idx.size()) return ea.idx.size() > eb.idx.size() ? 1 : -1;
    return cmp_desclex(ea.idx, eb.idx);
}

int cmp_u0(SymId a, SymId b) {
    if (a == b) return 0;
    const auto& t = tab();
    const auto& ea = t.entry(a);
    const auto& eb = t.entry(b);
    if (ea.twos != eb.twos) return ea.twos < eb.twos ? 1 : -1;
    if (ea.idx.size() != eb.idx.size()) return ea.idx.size() > eb.idx.size() ? 1 : -1;
    return cmp_desclex(ea.idx, eb.idx);
}

std::string str(SymId s) {
    const Indices& v = indices(s);
    std::string out = "s[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(int(v[i]));
    }
    out += "]";
    return out;
}

SymId parse(const std::string& text) {
    size_t l = text.find('[');
    size_t r = text.rfind(']');
    if (text.substr(0, l) != "s" || l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("bad symbol literal: " + text);
    Indices idx;
    size_t p = l + 1;
    while (p < r) {
        size_t q = text.find(',', p);
        if (q == std::string::npos || q > r) q = r;
        if (q > p) idx.push_back(uint8_t(std::stoi(text.substr(p, q - p))));
        p = q + 1;
    }
    return intern(std::move(idx));
}

size_t size() { return tab().count.load(std::memory_order_acquire); }

} // namespace sigma45
} // namespace sigma45
