#include "k3deg/acceptance.hpp"

#include "k3deg/kulikov.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace k3deg {

namespace {

std::vector<int> range(int from, int to)
{
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class T>
std::string list_str(const std::vector<T>& v)
{
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

CriterionResult enumeration_counts(int threads)
{
    const std::vector<long long> expected{6,      51,     328,    1518,  5406,  14979, 33132, 59339, 87077,
                                          105236, 105078, 86505,  58223, 31564, 13371, 4209,  883,   99};
    const EnumerationResult e = threads > 1 ? enumerate_elliptic(roots(), 19, threads) : full_enumeration();
    std::vector<long long> got(e.orbits.begin() + 1, e.orbits.begin() + 19);
    const long long rays = e.orbits[18] + static_cast<long long>(survey_parabolics(roots()).maximal_mod_s3.size());
    CriterionResult r{1, "elliptic subdiagram orbit counts by rank", false, ""};
    r.pass = got == expected && rays == 103 && e.orbits[19] == 0;
    r.detail = "orbits " + list_str(got) + "; rays " + std::to_string(rays);
    return r;
}

CriterionResult maximal_parabolics()
{
    const auto& rs = roots();
    const ParabolicSurvey s = survey_parabolics(rs);
    const std::vector<std::vector<std::string>> names{
        {"~A17"}, {"~D10", "~E7"}, {"~E8", "~E8", "irr:~A1"}, {"~A1*", "~D16"}};
    std::set<Mask> from_lists;
    bool shapes_ok = true;
    const auto lists = maximal_parabolic_lists();
    for (std::size_t k = 0; k < lists.size(); ++k) {
        Mask m = 0;
        std::vector<std::string> got;
        for (const auto& comp : lists[k]) {
            m |= mask_of(comp);
            got.push_back(shape(rs, mask_of(comp)).ascii());
        }
        std::sort(got.begin(), got.end());
        auto want = names[k];
        std::sort(want.begin(), want.end());
        shapes_ok = shapes_ok && got == want && definiteness(rs, m) == DiagramClass::Parabolic;
        from_lists.insert(canonical_s3(m));
    }
    const std::set<Mask> found(s.maximal_mod_s3.begin(), s.maximal_mod_s3.end());
    CriterionResult r{2, "maximal parabolic subdiagrams", false, ""};
    r.pass = shapes_ok && found == from_lists && found.size() == 4 && s.all_contained;
    r.detail = std::to_string(found.size()) + " classes, " + std::to_string(s.maximal.size()) +
               " diagrams; listed shapes " + (shapes_ok ? "match" : "differ");
    return r;
}

CriterionResult boundary_divisors()
{
    const DivisorCount d = count_boundary_divisors(roots(), full_enumeration());
    CriterionResult r{3, "boundary divisor count", false, ""};
    r.pass = d.type2 == 3 && d.type3 == 35;
    r.detail = "type II " + std::to_string(d.type2) + ", type III " + std::to_string(d.type3) + ", total " +
               std::to_string(d.type2 + d.type3);
    return r;
}

CriterionResult null_vectors()
{
    const auto& rs = roots();
    const IntVec n = null_vector(rs, lists::affine_E8_1());
    const IntVec want{1, 2, 3, 4, 5, 6, 4, 2, 3};
    const bool rel = verify_relations(rs);
    const std::size_t rank = relation_basis(rs).size();
    CriterionResult r{4, "null vectors and relations", false, ""};
    r.pass = n == want && rel && rank == 5;
    r.detail = "E8 coefficients " + list_str(n) + "; identities " + (rel ? "hold" : "fail") +
               "; relation rank " + std::to_string(rank);
    return r;
}

CriterionResult saturation()
{
    const auto& rs = roots();
    struct Listed {
        std::string name;
        std::vector<int> vertices;
        Int order;
    };
    const std::vector<Listed> listed{
        {"irr:vA1-", {23}, 2},
        {"^A9'", cat({18, 19}, range(0, 6)), 2},
        {"^A15'", cat({18, 20}, range(0, 12)), 2},
        {"D10'", cat({17, 18, 19}, range(0, 6)), 2},
        {"D16'", cat({17, 18, 20}, range(0, 12)), 2},
        {"A17", cat(range(3, 17), {0, 1}), 2},
        {"vA17-", cat(range(4, 17), {0, 1, 2}), 2},
        {"D18", cat({18, 17}, range(0, 15)), 2},
        {"A17", range(1, 17), 6},
    };
    std::map<Mask, Int> expected;
    std::vector<std::string> problems;
    for (const Listed& l : listed) {
        const Mask m = mask_of(l.vertices);
        if (shape(rs, m).ascii() != l.name) problems.push_back("list entry " + l.name + " has shape " + shape(rs, m).ascii());
        expected[canonical_s3(m)] = l.order;
    }
    int checked = 0;
    for (Mask m : connected_catalog(rs).elliptic) {
        ++checked;
        const IntVec q = saturation_quotient(rs, m);
        Int got = 1;
        for (const Int& x : q) got *= x;
        if (q.size() > 1) got = -1;
        auto it = expected.find(canonical_s3(m));
        const Int want = it == expected.end() ? Int(1) : it->second;
        if (got != want) {
            std::string v;
            for (int x : vertices_of(m)) v += (v.empty() ? "" : ",") + std::to_string(x);
            problems.push_back(shape(rs, m).ascii() + " [" + v + "] gives Z" + got.str() + ", expected " +
                               (want == 1 ? std::string("trivial") : "Z" + want.str()));
        }
    }
    CriterionResult r{5, "saturation quotients of connected elliptic diagrams", false, ""};
    r.pass = problems.empty();
    r.detail = std::to_string(checked) + " diagrams checked";
    for (const auto& p : problems) r.detail += "; " + p;
    return r;
}

CriterionResult worked_example()
{
    const auto& rs = roots();
    std::map<int, Rat> partial;
    for (int i : cat({18}, range(0, 16))) partial[i] = 0;
    partial[17] = 6;
    const AVector a = complete_a(rs, partial);
    std::vector<std::string> problems;
    const std::vector<int> tail{10, 8, 30, 14, 22};
    for (int k = 0; k < 5; ++k)
        if (a.a[19 + k] != tail[k]) problems.push_back("a" + std::to_string(19 + k) + " = " + to_string(a.a[19 + k]));
    const auto b = a.b();
    const std::vector<int> btail{3, 0, 5, 4, 15, 7, 11};
    for (int k = 0; k < 7; ++k)
        if (b[17 + k] != btail[k]) problems.push_back("b" + std::to_string(17 + k) + " = " + to_string(b[17 + k]));
    const auto bbar = a.bbar();
    for (int i = 0; i < kCycle; ++i) {
        const int want = i == 6 ? 5 : i == 12 ? 4 : i == 17 ? 3 : 0;
        if (bbar[i] != want) problems.push_back("bbar" + std::to_string(i) + " = " + to_string(bbar[i]));
    }
    const DegenerationLabel label = stable_model_label(rs, a);
    const bool label_ok = label.slices.size() == 1 && label.slices[0].component == mask_of(cat({18}, range(0, 16))) &&
                          label.slices[0].shape.kind == Kind::A && label.slices[0].shape.n == 18 &&
                          (label.slices[0].shape.left == Deco::Prime) != (label.slices[0].shape.right == Deco::Prime);
    if (!label_ok) problems.push_back("label " + label.text);
    const Triangulation t = triangulate(rs, a);
    int equator = 0, big = 0;
    std::string big_shape;
    for (const ComponentFate& f : contraction_plan(rs, t, a)) {
        if (f.fate == Fate::Trivial) continue;
        ++equator;
        if (f.fate == Fate::Big) {
            ++big;
            big_shape = f.shape;
        }
    }
    if (equator != 3 || big != 1 || big_shape != label.text)
        problems.push_back(std::to_string(equator) + " equator components, " + std::to_string(big) + " big");
    CriterionResult r{6, "worked A18 example", false, ""};
    r.pass = problems.empty();
    r.detail = "label " + label.text + " (leaf-ended A18); " + std::to_string(equator) +
               " equator components, big: " + big_shape;
    for (const auto& p : problems) r.detail += "; " + p;
    return r;
}

CriterionResult monodromy_table()
{
    auto trace = [](std::vector<int> n) { return monodromy(SingularityData::I(n)).trace(); };
    std::vector<std::string> problems;
    int rows = 0;
    for (int n = 3; n <= 12; ++n) {
        const std::vector<std::pair<std::vector<int>, Int>> family{
            {{n + 1}, 2},
            {{2, 2, n - 2}, -2},
            {{2, 3, n - 3}, n - 7},
            {{n + 1, 1}, 1 - n},
            {{n, n, 2}, (n - 2) * (n - 2) - 2},
        };
        for (const auto& [pres, want] : family) {
            ++rows;
            if (trace(pres) != want) problems.push_back(SingularityData::I(pres).name);
        }
    }
    const std::vector<std::pair<std::vector<int>, Int>> fixed{
        {{1, 1}, 1}, {{1, 1, 1}, 0}, {{2, 1, 1}, -1}, {{2, 3, 3}, -1}, {{2, 3, 4}, 0}, {{2, 3, 5}, 1}};
    for (const auto& [pres, want] : fixed) {
        ++rows;
        if (trace(pres) != want) problems.push_back(SingularityData::I(pres).name);
    }
    SingularityData d0;
    d0.rays = {{{1, 0}, 1}, {{1, 2}, 1}};
    ++rows;
    if (monodromy(d0).trace() != -2) problems.push_back("D0");
    const bool m2 = monodromy(SingularityData::I({1, 1})) == kodaira::II();
    if (!m2) problems.push_back("I(1,1) differs from M_II");
    int pairs = 0;
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            ++pairs;
            const auto x = conjugacy_class(monodromy(SingularityData::I({2, p, q})));
            const auto y = conjugacy_class(monodromy(SingularityData::I({p, 1, q, 1})));
            if (x != y) problems.push_back("I(2," + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    CriterionResult r{7, "monodromy traces and presentations", false, ""};
    r.pass = problems.empty();
    r.detail = std::to_string(rows) + " rows, " + std::to_string(pairs) + " presentation pairs";
    for (const auto& p : problems) r.detail += "; " + p;
    return r;
}

CriterionResult volume_identity()
{
    const auto& rs = roots();
    std::mt19937_64 rng(20240601);
    SampleOptions opt;
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, opt);
        const Rat n = norm(rs, a);
        for (Placement p : {Placement::Symmetric, Placement::VertexPreferred})
            if (volume(*build_ias(rs, a, p).sphere) != n) ++bad;
    }
    CriterionResult r{8, "volume equals square", false, ""};
    r.pass = bad == 0;
    r.detail = "100 random chamber vectors, two placements, " + std::to_string(bad) + " mismatches";
    return r;
}

CriterionResult triangulation_invariants()
{
    const auto& rs = roots();
    std::mt19937_64 rng(77);
    SampleOptions opt;
    opt.positive = true;
    int bad = 0;
    std::string first;
    for (int k = 0; k < 25; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, opt);
        const Triangulation t = triangulate(rs, a);
        const auto [np, nm] = eigenranks(t);
        const int charge = singular_locus(rs, a).total_charge;
        const bool ok = t.f == norm(rs, a) && t.e - 3 * t.v == -6 && t.v - t.e + t.f == 2 &&
                        dsemistable_dimension(t) == 19 && np == 1 && nm == 18 && charge == 24 &&
                        t.q_E + 2 * t.q_N == 24 && t.e_E == t.v_E;
        if (!ok) {
            ++bad;
            if (first.empty()) first = to_json(t).dump();
        }
    }
    CriterionResult r{9, "triangulation invariants", false, ""};
    r.pass = bad == 0;
    r.detail = "25 random parity-valid vectors, " + std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first);
    return r;
}

CriterionResult reduction()
{
    const auto& rs = roots();
    std::mt19937_64 rng(4242);
    SampleOptions opt;
    opt.parity = false;
    opt.positive = true;
    int bad = 0;
    for (int k = 0; k < 200; ++k) {
        const AVector v = sample_chamber_vector(rs, rng, opt);
        const int len = std::uniform_int_distribution<int>(1, 12)(rng);
        AVector w = v;
        for (int s = 0; s < len; ++s) w = reflect(rs, w, std::uniform_int_distribution<int>(0, kRoots - 1)(rng));
        const Reduction red = reduce_to_fundamental(rs, w);
        bool ok = red.result.a == v.a;
        for (std::size_t i = 1; i < red.certificate.size(); ++i) ok = ok && red.certificate[i] < red.certificate[i - 1];
        const Reduction again = reduce_to_fundamental(rs, red.result);
        ok = ok && again.word.empty() && again.result.a == red.result.a;
        if (!ok) ++bad;
    }
    CriterionResult r{10, "reduction into the chamber", false, ""};
    r.pass = bad == 0;
    r.detail = "200 random words, " + std::to_string(bad) + " failures";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int threads)
{
    const std::vector<std::function<CriterionResult()>> checks{
        [&] { return enumeration_counts(threads); },
        maximal_parabolics,
        boundary_divisors,
        null_vectors,
        saturation,
        worked_example,
        monodromy_table,
        volume_identity,
        triangulation_invariants,
        reduction,
    };
    std::vector<CriterionResult> out;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        try {
            out.push_back(checks[k]());
        } catch (const std::exception& e) {
            out.push_back({static_cast<int>(k + 1), "criterion " + std::to_string(k + 1), false,
                           std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::string format_result(const CriterionResult& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace k3deg
