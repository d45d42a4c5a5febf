// tables.hpp
//
// Sieved tables of mu^2(q), phi(q) and the least prime factor, built in
// cache-sized segments so limits up to ~1e9 stay feasible.  Entries are
// exact integers; all downstream interval quantities are derived from them.
//
// Optional binary cache: header (magic, version, limit), packed phi / mu^2 /
// lpf arrays, little-endian, FNV-1a checksum.  Regenerated if absent or
// invalid.

#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbach {

class MultTables {
public:
    static constexpr uint64_t kDefaultBudget = 80'000'000; // entries
    static constexpr uint64_t kSegment = uint64_t(1) << 22;

    static MultTables build(uint64_t limit, uint64_t budget = kDefaultBudget) {
        if (limit < 1) throw std::invalid_argument("MultTables: limit must be >= 1");
        if (limit > budget)
            throw std::runtime_error("MultTables: limit " + std::to_string(limit) +
                                     " exceeds memory budget " + std::to_string(budget));
        MultTables t;
        t.limit_ = limit;
        t.phi_.assign(limit + 1, 0);
        t.musq_.assign(limit + 1, 1);
        t.lpf_.assign(limit + 1, 0);
        t.phi_[0] = 0; t.musq_[0] = 0; t.lpf_[0] = 0;
        t.phi_[1] = 1; t.musq_[1] = 1; t.lpf_[1] = 1;

        // primes up to sqrt(limit)
        uint64_t root = 1;
        while ((root + 1) * (root + 1) <= limit) ++root;
        std::vector<uint32_t> primes = small_primes(root);

        std::vector<uint64_t> rem(kSegment);
        for (uint64_t lo = 2; lo <= limit; lo += kSegment) {
            uint64_t hi = std::min(limit, lo + kSegment - 1);
            uint64_t len = hi - lo + 1;
            for (uint64_t i = 0; i < len; ++i) {
                rem[i] = lo + i;
                t.phi_[lo + i] = 1;
            }
            for (uint32_t p : primes) {
                uint64_t p64 = p;
                uint64_t start = ((lo + p64 - 1) / p64) * p64;
                for (uint64_t n = start; n <= hi; n += p64) {
                    uint64_t i = n - lo;
                    uint32_t e = 0;
                    while (rem[i] % p64 == 0) { rem[i] /= p64; ++e; }
                    if (e == 0) continue;
                    if (t.lpf_[n] == 0) t.lpf_[n] = p;
                    if (e >= 2) t.musq_[n] = 0;
                    uint64_t pe = 1;
                    for (uint32_t k = 1; k < e; ++k) pe *= p64;
                    t.phi_[n] = (uint32_t)(t.phi_[n] * pe * (p64 - 1));
                }
            }
            for (uint64_t i = 0; i < len; ++i) {
                uint64_t n = lo + i;
                if (rem[i] > 1) {
                    // one prime factor > sqrt(limit) remains
                    t.phi_[n] = (uint32_t)(t.phi_[n] * (rem[i] - 1));
                    if (t.lpf_[n] == 0) t.lpf_[n] = (uint32_t)rem[i];
                }
            }
        }
        return t;
    }

    uint64_t limit() const { return limit_; }
    uint32_t phi(uint64_t n) const { return phi_[n]; }
    bool squarefree(uint64_t n) const { return musq_[n] != 0; }
    uint32_t mu_sq(uint64_t n) const { return musq_[n]; }
    uint32_t lpf(uint64_t n) const { return lpf_[n]; }

    // distinct prime factors of n (n <= limit)
    std::vector<uint32_t> prime_factors(uint64_t n) const {
        std::vector<uint32_t> ps;
        while (n > 1) {
            uint32_t p = lpf_[n];
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
        return ps;
    }

    static std::vector<uint32_t> small_primes(uint64_t n) {
        std::vector<uint8_t> comp(n + 1, 0);
        std::vector<uint32_t> primes;
        for (uint64_t i = 2; i <= n; ++i) {
            if (!comp[i]) {
                primes.push_back((uint32_t)i);
                for (uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
            }
        }
        return primes;
    }

    // ---- binary cache ----------------------------------------------------

    bool save(const std::string& path) const {
        FILE* f = std::fopen(path.c_str(), "wb");
        if (!f) return false;
        uint64_t h = kFnvOffset;
        auto w = [&](const void* p, size_t n) {
            fwrite(p, 1, n, f);
            fnv(h, p, n);
        };
        const char magic[4] = {'G', 'B', 'T', 'B'};
        uint32_t version = 1;
        std::fwrite(magic, 1, 4, f);
        w(&version, sizeof version);
        w(&limit_, sizeof limit_);
        w(phi_.data(), phi_.size() * sizeof(uint32_t));
        w(musq_.data(), musq_.size());
        w(lpf_.data(), lpf_.size() * sizeof(uint32_t));
        std::fwrite(&h, sizeof h, 1, f);
        std::fclose(f);
        return true;
    }

    static bool load(const std::string& path, MultTables& out) {
        FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) return false;
        char magic[4];
        if (std::fread(magic, 1, 4, f) != 4 || magic[0] != 'G' || magic[1] != 'B' ||
            magic[2] != 'T' || magic[3] != 'B') { std::fclose(f); return false; }
        uint64_t h = kFnvOffset;
        auto r = [&](void* p, size_t n) {
            if (std::fread(p, 1, n, f) != n) return false;
            fnv(h, p, n);
            return true;
        };
        uint32_t version = 0;
        uint64_t limit = 0;
        if (!r(&version, sizeof version) || version != 1 || !r(&limit, sizeof limit)) {
            std::fclose(f);
            return false;
        }
        MultTables t;
        t.limit_ = limit;
        t.phi_.resize(limit + 1);
        t.musq_.resize(limit + 1);
        t.lpf_.resize(limit + 1);
        bool ok = r(t.phi_.data(), t.phi_.size() * sizeof(uint32_t)) &&
                  r(t.musq_.data(), t.musq_.size()) &&
                  r(t.lpf_.data(), t.lpf_.size() * sizeof(uint32_t));
        uint64_t want = 0;
        ok = ok && std::fread(&want, sizeof want, 1, f) == 1 && want == h;
        std::fclose(f);
        if (ok) out = std::move(t);
        return ok;
    }

private:
    static constexpr uint64_t kFnvOffset = 1469598103934665603ull;
    static void fnv(uint64_t& h, const void* p, size_t n) {
        const unsigned char* b = static_cast<const unsigned char*>(p);
        for (size_t i = 0; i < n; ++i) { h ^= b[i]; h *= 1099511628211ull; }
    }

    uint64_t limit_ = 0;
    std::vector<uint32_t> phi_;
    std::vector<uint8_t> musq_;
    std::vector<uint32_t> lpf_;
};

} // namespace goldbach
