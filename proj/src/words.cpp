#include "affdim/words.hpp"

#include <stdexcept>

namespace affdim {

namespace {

void fkm(int t, int p, int n, int N, std::vector<uint8_t>& a,
         std::vector<NecklaceClass>& out) {
    if (t > n) {
        if (n % p == 0) {
            NecklaceClass c;
            c.representative.letters.assign(a.begin() + 1, a.end());
            c.class_size = p;
            out.push_back(std::move(c));
        }
        return;
    }
    a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - p)];
    fkm(t + 1, p, n, N, a, out);
    for (int j = a[static_cast<size_t>(t - p)] + 1; j < N; ++j) {
        a[static_cast<size_t>(t)] = static_cast<uint8_t>(j);
        fkm(t + 1, t, n, N, a, out);
    }
}

}  // namespace

std::vector<NecklaceClass> enumerate_necklaces(int N, int n) {
    if (N < 1 || n < 1) throw std::invalid_argument("necklace enumeration needs N, n >= 1");
    std::vector<NecklaceClass> out;
    std::vector<uint8_t> a(static_cast<size_t>(n) + 1, 0);
    fkm(1, 1, n, N, a, out);
    return out;
}

std::vector<NecklaceClass> enumerate_all_words(int N, int n) {
    if (N < 1 || n < 1) throw std::invalid_argument("word enumeration needs N, n >= 1");
    std::vector<NecklaceClass> out;
    std::vector<uint8_t> w(static_cast<size_t>(n), 0);
    while (true) {
        NecklaceClass c;
        c.representative.letters = w;
        c.class_size = 1;
        out.push_back(std::move(c));
        int pos = n - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == N - 1) {
            w[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
    }
    return out;
}

}  // namespace affdim
