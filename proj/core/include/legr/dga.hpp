#pragma once

#include "legr/algebra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace legr {

// Noncommutative polynomial over Z: word of generator ids -> coefficient.
// The empty word is the unit.
using Word = std::vector<int>;
using NCPoly = std::map<Word, std::int64_t>;

struct Generator {
    std::string name;
    int degree = 0;
    int a = 0;  // k_{a,b} or v_{a,i}
    int b = 0;
};

class DGA {
public:
    int add_generator(Generator g);
    void set_differential(int gen, NCPoly d);

    const std::vector<Generator>& generators() const { return gens_; }
    const NCPoly& differential(int gen) const { return diff_.at(gen); }
    int find(const std::string& name) const;  // -1 if absent

    // graded Leibniz extension to arbitrary polynomials
    NCPoly apply(const NCPoly& p) const;
    int word_degree(const Word& w) const;

    // generators g with d(d(g)) != 0
    std::vector<int> d_squared_failures() const;
    // generators whose differential has a monomial of the wrong degree
    std::vector<int> degree_failures() const;

    // generator -> differential, restricted to generators of the given degree
    std::map<int, NCPoly> differential_in_degree(int degree) const;

    std::string to_json() const;

private:
    std::vector<Generator> gens_;
    std::vector<NCPoly> diff_;
};

// the one place the (-1)^{|x|-1} convention lives
int koszul_sign(int degree);

std::string poly_str(const DGA& dga, const NCPoly& p);

// border DGA A_n(mu): generators k_{ab}, a < b
DGA build_border_dga(const std::vector<int>& mu);

// internal DGA of a vertex of type (l, r), truncated to v_{a,i} with i <= N + n,
// N the largest i with some |v_{a,i}| <= 1
struct InternalDGA {
    int l = 0, r = 0;
    std::vector<int> mu;
    int window = 0;  // N + n
    DGA dga;
};
InternalDGA build_internal_dga(int l, int r, const std::vector<int>& mu_v);
// potentials of the same vertex read as type (0, n)
std::vector<int> normalize_to_zero_left(int l, int r, const std::vector<int>& mu_v);

// k_{ab} -> v_{a,b-a} into the type (0,n) internal DGA; true when it commutes with d
bool inclusion_is_chain_map(const std::vector<int>& mu, std::string* why = nullptr);

// number of algebra maps to F_p killing d on degree-1 generators: degree-0
// generators are free unknowns, everything else maps to 0
BigInt count_augmentations(const DGA& dga, std::uint32_t p);

}  // namespace legr
