#include <semiring/classify.hh>
#include <semiring/green.hh>

#include <algorithm>
#include <functional>

using std::optional;
using std::string;
using std::vector;

namespace semiring
{
    namespace
    {
        auto first_failure(const Semiring & s, const VarietySpec & v) -> optional<string>
        {
            for (auto & id : v.identities)
                if (auto c = find_counterexample(s, id))
                    return "'" + to_string(id) + "' fails at " + format_assignment(*c);
            return std::nullopt;
        }

        auto is_abelian_group(const OpTable & t) -> bool
        {
            int n = t.order();
            if (! t.is_commutative())
                return false;
            Element identity = -1;
            for (Element e = 0 ; e < n && identity < 0 ; ++e) {
                bool ok = true;
                for (Element x = 0 ; x < n && ok ; ++x)
                    ok = t.at(e, x) == x;
                if (ok)
                    identity = e;
            }
            if (identity < 0)
                return false;
            for (Element x = 0 ; x < n ; ++x) {
                bool found = false;
                for (Element y = 0 ; y < n && ! found ; ++y)
                    found = t.at(x, y) == identity;
                if (! found)
                    return false;
            }
            return true;
        }

        auto subsemiring_of_block(const Semiring & s, const vector<Element> & block) -> optional<Semiring>
        {
            SubsetView view(s, block);
            if (! view.closed_under_add() || ! view.closed_under_mul())
                return std::nullopt;
            return view.as_semiring();
        }
    }

    auto completely_regular_routes(const Semiring & s) -> CompletelyRegularRoutes
    {
        CompletelyRegularRoutes result;

        if (! s.has_pseudo_inverse())
            result.equational_witness = "(S, +) is not a union of groups";
        else if (auto f = first_failure(s, variety("CR")))
            result.equational_witness = *f;
        else
            result.equational = true;

        auto h = green(s.add_table()).H;
        if (auto f = congruence_failure(s, h))
            result.structural_witness = "H+ " + h.to_string() + " is not a congruence";
        else {
            auto q = quotient(Congruence(s, h)).algebra;
            if (! is_idempotent_semiring(q))
                result.structural_witness = "S/H+ is not an idempotent semiring";
            else {
                result.structural = true;
                for (auto & block : h.blocks()) {
                    auto sub = subsemiring_of_block(s, block);
                    if (! sub || ! is_abelian_group(sub->add_table())) {
                        result.structural = false;
                        result.structural_witness = "H+ class of " + std::to_string(block.front()) + " is not a ring";
                        break;
                    }
                }
            }
        }
        return result;
    }

    auto is_completely_regular(const Semiring & s) -> bool
    {
        auto routes = completely_regular_routes(s);
        if (routes.equational != routes.structural)
            throw TheoremViolation("union-of-rings routes disagree: equational " + string(routes.equational ? "true" : "false")
                    + " (" + routes.equational_witness + "), structural " + (routes.structural ? "true" : "false")
                    + " (" + routes.structural_witness + ")");
        return routes.equational;
    }

    auto is_orthoring(const Semiring & s) -> bool
    {
        if (! is_completely_regular(s))
            return false;
        auto e = additive_idempotents(s);
        return e.closed_under_add() && e.closed_under_mul();
    }

    auto is_ring(const Semiring & s) -> bool
    {
        return is_abelian_group(s.add_table());
    }

    namespace
    {
        auto rectangular_idempotents(const Semiring & s, const std::function<bool (Element, Element)> & extra) -> bool
        {
            if (! is_completely_regular(s))
                return false;
            if (! green(s.add_table()).J.is_universal())
                return false;
            auto e = additive_idempotents(s);
            if (! e.closed_under_add())
                return false;
            for (auto a : e.members())
                for (auto b : e.members())
                    if (s.add(s.add(a, b), a) != a || ! extra(a, b))
                        return false;
            return true;
        }

        auto check_rectangular_factorisation(const Semiring & s, int cap) -> void
        {
            auto e = additive_idempotents(s);
            auto h = green(s.add_table()).H;
            Element e0 = e.members().front();
            auto ring = subsemiring_of_block(s, h.blocks()[h.block_of(e0)]);
            if (! ring || ! is_ring(*ring))
                throw TheoremViolation("H+ class of " + std::to_string(e0) + " in a rectangular ring is not a ring");
            auto product = direct_product(e.as_semiring(), *ring, std::max(cap, s.order()));
            if (! find_isomorphism(s, product, std::max(cap, s.order())))
                throw TheoremViolation("rectangular ring is not isomorphic to E+(S) x H");
        }
    }

    auto is_rectangular_ring(const Semiring & s, int cap) -> bool
    {
        if (! rectangular_idempotents(s, [] (Element, Element) { return true; }))
            return false;
        check_rectangular_factorisation(s, cap);
        return true;
    }

    auto is_left_ring(const Semiring & s, int cap) -> bool
    {
        if (! rectangular_idempotents(s, [&] (Element a, Element b) { return s.add(a, b) == a; }))
            return false;
        check_rectangular_factorisation(s, cap);
        return true;
    }

    auto is_right_ring(const Semiring & s, int cap) -> bool
    {
        if (! rectangular_idempotents(s, [&] (Element a, Element b) { return s.add(a, b) == b; }))
            return false;
        check_rectangular_factorisation(s, cap);
        return true;
    }

    namespace
    {
        auto idempotents_in(const Semiring & s, const string & name) -> bool
        {
            return is_orthoring(s) && in_variety(additive_idempotents(s).as_semiring(), name);
        }
    }

    auto is_band_orthoring(const Semiring & s) -> bool
    {
        return idempotents_in(s, "BI");
    }

    auto is_left_band_orthoring(const Semiring & s) -> bool
    {
        return idempotents_in(s, "LBI");
    }

    auto is_right_band_orthoring(const Semiring & s) -> bool
    {
        return idempotents_in(s, "RBI");
    }

    auto weak_clifford_routes(const Semiring & s) -> WeakCliffordRoutes
    {
        WeakCliffordRoutes result;

        if (! s.add_table().is_commutative())
            result.equational_witness = "addition is not commutative";
        else if (! is_completely_regular(s))
            result.equational_witness = "not a union of rings";
        else if (auto f = first_failure(s, variety("WC")))
            result.equational_witness = *f;
        else
            result.equational = true;

        auto eta = least_dl_congruence(s);
        result.structural = true;
        for (auto & block : eta.partition().blocks()) {
            auto sub = subsemiring_of_block(s, block);
            if (! sub || ! is_ring(*sub)) {
                result.structural = false;
                result.structural_witness = "class of " + std::to_string(block.front()) + " in the least distributive lattice congruence "
                    + eta.to_string() + " is not a ring";
                break;
            }
        }
        return result;
    }

    auto is_weak_clifford(const Semiring & s) -> bool
    {
        auto routes = weak_clifford_routes(s);
        if (routes.equational != routes.structural)
            throw TheoremViolation("weak Clifford routes disagree: equational " + string(routes.equational ? "true" : "false")
                    + " (" + routes.equational_witness + "), structural " + (routes.structural ? "true" : "false")
                    + " (" + routes.structural_witness + ")");
        return routes.equational;
    }

    auto is_clifford(const Semiring & s) -> bool
    {
        return is_weak_clifford(s) && is_k_ideal(additive_idempotents(s));
    }

    auto is_in(const Semiring & s, const string & name, Convention convention) -> Verdict
    {
        auto & v = variety(name, convention);
        if (v.requires_inverse && ! s.has_pseudo_inverse())
            return Verdict{ false, "pseudo-inverse absent: (S, +) is not a union of groups" };
        if (auto f = first_failure(s, v))
            return Verdict{ false, *f };
        for (auto & extra : v.extra_predicates) {
            if (extra == "k-ideal(E+)") {
                if (! is_k_ideal(additive_idempotents(s)))
                    return Verdict{ false, "E+ is not a k-ideal" };
            }
            else
                throw Error("unknown extra predicate '" + extra + "'");
        }
        return Verdict{ true, "" };
    }

    auto in_variety(const Semiring & s, const string & name, Convention convention) -> bool
    {
        return is_in(s, name, convention).holds;
    }

    auto congruence_classes(const Congruence & c) -> vector<Semiring>
    {
        vector<Semiring> result;
        for (auto & block : c.partition().blocks())
            result.push_back(SubsetView(c.parent(), block).as_semiring());
        return result;
    }

    namespace
    {
        auto classes_in(const Congruence & c, const string & inner, Convention convention) -> bool
        {
            for (auto & block : c.partition().blocks()) {
                auto sub = subsemiring_of_block(c.parent(), block);
                if (! sub || ! in_variety(*sub, inner, convention))
                    return false;
            }
            return true;
        }
    }

    auto malcev_witness(const Semiring & s, const string & inner, MalcevMode mode, Convention convention) -> optional<Congruence>
    {
        if (! is_idempotent_semiring(s))
            throw PreconditionError("Mal'cev witnesses are defined here for idempotent semirings");

        if (mode == MalcevMode::DQuotient) {
            auto c = least_dl_congruence(s);
            if (classes_in(c, inner, convention))
                return c;
            return std::nullopt;
        }

        auto d = additive_green_congruence(s, 'D');
        if (! d || ! classes_in(*d, "R+", convention))
            return std::nullopt;
        if (! malcev_witness(quotient(*d).algebra, inner, MalcevMode::DQuotient, convention))
            return std::nullopt;
        return d;
    }

    auto malcev_witness_by_search(const Semiring & s, const string & inner, Convention convention, int cap) -> optional<Congruence>
    {
        for (auto & c : all_congruences(s, cap))
            if (in_variety(quotient(c).algebra, "D") && classes_in(c, inner, convention))
                return c;
        return std::nullopt;
    }

    namespace
    {
        const vector<string> structural_predicates = {
            "idempotent", "completely-regular", "orthoring", "ring", "rectangular-ring", "left-ring", "right-ring",
            "band-orthoring", "left-band-orthoring", "right-band-orthoring", "weak-clifford", "clifford"
        };
    }

    auto predicate_names(Convention convention) -> vector<string>
    {
        vector<string> result = structural_predicates;
        for (auto & [name, _] : catalog(convention))
            result.push_back(name);
        return result;
    }

    auto evaluate_predicate(const Semiring & s, const string & name, const ClassifyOptions & options) -> Verdict
    {
        auto simple = [] (bool b) { return Verdict{ b, "" }; };

        if (name == "idempotent")
            return simple(is_idempotent_semiring(s));
        if (name == "completely-regular") {
            auto routes = completely_regular_routes(s);
            bool verdict = is_completely_regular(s);
            return Verdict{ verdict, verdict ? "" : routes.equational_witness };
        }
        if (name == "orthoring")
            return simple(is_orthoring(s));
        if (name == "ring")
            return simple(is_ring(s));
        if (name == "rectangular-ring")
            return simple(is_rectangular_ring(s, options.isomorphism_cap));
        if (name == "left-ring")
            return simple(is_left_ring(s, options.isomorphism_cap));
        if (name == "right-ring")
            return simple(is_right_ring(s, options.isomorphism_cap));
        if (name == "band-orthoring")
            return simple(is_band_orthoring(s));
        if (name == "left-band-orthoring")
            return simple(is_left_band_orthoring(s));
        if (name == "right-band-orthoring")
            return simple(is_right_band_orthoring(s));
        if (name == "weak-clifford") {
            auto routes = weak_clifford_routes(s);
            bool verdict = is_weak_clifford(s);
            return Verdict{ verdict, verdict ? "" : routes.equational_witness };
        }
        if (name == "clifford")
            return simple(is_clifford(s));
        return is_in(s, name, options.convention);
    }
}
