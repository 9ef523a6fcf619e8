// Writes the JSON fixtures used by the CLI tests into a directory. The
// permutation tensors come from Latin square enumeration, not from hand-typed
// files.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "stochpoly/serialize.hpp"

namespace fs = std::filesystem;
using namespace stochpoly;

namespace {

void write(const fs::path& dir, const std::string& name, const Json& j)
{
    std::ofstream out(dir / name);
    out << j.dump(2) << '\n';
}

Json matrix_json(int n, const std::vector<Rational>& entries)
{
    Json rows = Json::array();
    for (int r = 0; r < n; ++r) {
        Json row = Json::array();
        for (int c = 0; c < n; ++c) {
            row.push_back(to_string(entries[static_cast<std::size_t>(r * n + c)]));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", n}, {"rows", std::move(rows)}};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_assets OUTPUT_DIR\n";
        return 1;
    }
    const fs::path dir = argv[1];
    fs::create_directories(dir);

    write(dir, "Q.json", to_json(example_q()));
    write(dir, "uniform3.json", to_json(uniform_tensor(3)));
    write(dir, "zeros.json", to_json(Tensor3(3)));

    Json perms = Json::array();
    int index = 0;
    for (const LatinSquare& s : enumerate_latin_squares(3)) {
        const Json t = to_json(latin_to_tensor(s));
        write(dir, "perm3_" + std::to_string(++index) + ".json", t);
        perms.push_back(t);
    }
    write(dir, "perms3.json", perms);

    write(dir, "identity.json", matrix_json(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    write(dir, "uniform2.json", matrix_json(2, std::vector<Rational>(4, make_rational(1, 2))));
    write(dir, "not_stochastic.json", matrix_json(2, {1, 0, 1, 0}));

    // Random convex combination of random permutation matrices, fixed seed.
    constexpr int n = 6;
    std::mt19937 rng(20240601);
    std::vector<Rational> mix(n * n, Rational(0));
    std::vector<int> weights{3, 1, 4, 1, 5, 9, 2};
    const int total = 25;
    for (int w : weights) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int r = 0; r < n; ++r) {
            mix[static_cast<std::size_t>(r * n + perm[r])] += make_rational(w, total);
        }
    }
    write(dir, "random_mix.json", matrix_json(n, mix));
    return 0;
}
