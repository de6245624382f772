#include "sccc/interleaving.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sccc/rng.hpp"

namespace sccc {

std::string Interleaver::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::identity: os << "identity"; break;
        case Kind::random: os << "random"; break;
        case Kind::s_random: os << "s_random(" << s_value << ")"; break;
    }
    return os.str();
}

namespace {

void check_bijection(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(p)])
            throw std::logic_error("interleaver: permutation is not a bijection");
        seen[static_cast<size_t>(p)] = 1;
    }
}

std::vector<int> shuffled_identity(int n, Rng& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
        std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
    }
    return v;
}

}  // namespace

Interleaver make_identity_interleaver(int n) {
    if (n < 1) throw std::invalid_argument("interleaver: n must be >= 1");
    Interleaver ilv;
    ilv.perm.resize(static_cast<size_t>(n));
    std::iota(ilv.perm.begin(), ilv.perm.end(), 0);
    ilv.kind = Interleaver::Kind::identity;
    return ilv;
}

Interleaver make_random_interleaver(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("interleaver: n must be >= 1");
    Rng rng(seed);
    Interleaver ilv;
    ilv.perm = shuffled_identity(n, rng);
    ilv.kind = Interleaver::Kind::random;
    ilv.seed = seed;
    check_bijection(ilv.perm);
    return ilv;
}

Interleaver make_s_random_interleaver(int n, int s, uint64_t seed, int max_restarts) {
    if (n < 1) throw std::invalid_argument("interleaver: n must be >= 1");
    if (s < 0) throw std::invalid_argument("interleaver: S must be >= 0");
    Rng rng(seed);

    // conflicts of position i against its +-S index window
    auto conflicts_at = [n, s](const std::vector<int>& perm, int i) {
        int c = 0;
        for (int j = std::max(0, i - s); j <= std::min(n - 1, i + s); ++j)
            if (j != i && std::abs(perm[static_cast<size_t>(i)] - perm[static_cast<size_t>(j)]) <= s) ++c;
        return c;
    };

    // min-conflicts repair from random starts; each restart is a fresh shuffle
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> perm = shuffled_identity(n, rng);
        bool satisfied = false;
        for (int round = 0; round < 300 && !satisfied; ++round) {
            std::vector<int> bad;
            for (int i = 0; i < n; ++i)
                if (conflicts_at(perm, i) > 0) bad.push_back(i);
            if (bad.empty()) {
                satisfied = true;
                break;
            }
            for (int i : bad) {
                if (conflicts_at(perm, i) == 0) continue;
                for (int tries = 0; tries < 40; ++tries) {
                    const int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
                    if (j == i) continue;
                    const int before = conflicts_at(perm, i) + conflicts_at(perm, j);
                    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
                    const int after = conflicts_at(perm, i) + conflicts_at(perm, j);
                    // occasional sideways moves get the descent off plateaus
                    if (after < before || (after == before && rng.next_below(4) == 0)) break;
                    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
                }
            }
        }
        if (satisfied) {
            Interleaver ilv;
            ilv.perm = std::move(perm);
            ilv.kind = Interleaver::Kind::s_random;
            ilv.s_value = s;
            ilv.seed = seed;
            check_bijection(ilv.perm);
            return ilv;
        }
    }
    std::ostringstream msg;
    msg << "interleaver: S-random constraint (N=" << n << ", S=" << s << ") not met within "
        << max_restarts << " restarts";
    throw std::runtime_error(msg.str());
}

void write_interleaver(const Interleaver& ilv, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_interleaver: cannot open " + path);
    out << "# n=" << ilv.size() << " kind=" << ilv.describe() << " seed=" << ilv.seed << "\n";
    for (int p : ilv.perm) out << p << "\n";
}

Interleaver read_interleaver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_interleaver: cannot open " + path);
    std::string header;
    std::getline(in, header);
    int n = 0;
    char kind_buf[64] = {0};
    unsigned long long seed = 0;
    if (std::sscanf(header.c_str(), "# n=%d kind=%63s seed=%llu", &n, kind_buf, &seed) != 3)
        throw std::runtime_error("read_interleaver: bad header in " + path);
    Interleaver ilv;
    ilv.seed = seed;
    const std::string kind(kind_buf);
    if (kind == "identity") {
        ilv.kind = Interleaver::Kind::identity;
    } else if (kind == "random") {
        ilv.kind = Interleaver::Kind::random;
    } else if (kind.rfind("s_random(", 0) == 0) {
        ilv.kind = Interleaver::Kind::s_random;
        ilv.s_value = std::stoi(kind.substr(9));
    } else {
        throw std::runtime_error("read_interleaver: unknown kind " + kind);
    }
    int idx;
    while (in >> idx) ilv.perm.push_back(idx);
    if (static_cast<int>(ilv.perm.size()) != n)
        throw std::runtime_error("read_interleaver: index count does not match header");
    check_bijection(ilv.perm);
    return ilv;
}

}  // namespace sccc
