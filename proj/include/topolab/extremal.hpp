#pragma once

#include "topolab/labelling.hpp"

namespace topolab {

enum class ObjectiveTag { difference_sum, felicitous_sum };

struct Objective {
    ObjectiveTag tag = ObjectiveTag::difference_sum;
    static Objective difference_sum() { return {ObjectiveTag::difference_sum}; }
    static Objective felicitous_sum() { return {ObjectiveTag::felicitous_sum}; }
    int modulus(const Graph& g) const { return g.q() + 1; }
};

enum class Direction { min, max };

/// Sum over edges of |f(u)-f(v)| or (f(u)+f(v)) mod (q+1); vertex labels must
/// be injective within [0,q].
long long evaluate(const Graph& g, const Labelling& f, const Objective& obj);

struct ExtremalResult {
    long long value = 0;
    Labelling labelling;
    enum class Method { brute, local_search, closed_form, caterpillar_exact } method = Method::brute;
    bool optimal = false;
};

/// Exhaustive oracle over all injections V -> [0,q].
ExtremalResult brute_force_extremal(const Graph& g, const Objective& obj, Direction dir);

/// All optimal labellings (same domain), lexicographic order.
std::vector<Labelling> brute_force_argset(const Graph& g, const Objective& obj, Direction dir);

struct Family {
    enum class Tag { complete, path, star } tag;
    int param = 0;
    static Family complete(int n) { return {Tag::complete, n}; }
    static Family path(int p) { return {Tag::path, p}; }
    static Family star(int p) { return {Tag::star, p}; } // p = total vertex count
};

long long closed_form(const Family& family, Direction dir);

/// Swap-rule local search with random restarts.
ExtremalResult local_search_extremal(const Graph& g, const Objective& obj, Direction dir,
                                     int restarts, unsigned seed);

ExtremalResult caterpillar_min_sum(const Graph& t);

struct BandParameters {
    long long b_sub = 0;
    long long b_sum = 0;
};

/// B_sub and B_sum of a proper vertex coloring using exactly chi(G) colors.
BandParameters coloring_band_parameters(const Graph& g, const std::vector<int>& coloring);

} // namespace topolab
