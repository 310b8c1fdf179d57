#include "sol/theories.hpp"

#include "sol/error.hpp"
#include "sol/parse.hpp"

#include <map>
#include <optional>
#include <utility>

namespace sol {

namespace {

// The successor-style relation on cardinality abstracts: P(a, b) holds when
// some set of size b extends a set of size a by exactly one member. The
// bound names X, Y, y, u stay clear of every argument name used below.
std::string pred_text(const std::string &a, const std::string &b) {
    return "exists X. exists Y. (#X = " + a + " and #Y = " + b +
           " and exists y. (y in Y and forall u. (u in X <-> (u in Y and not u = y))))";
}

std::string sa_text() {
    const std::string her =
        "(forall a. forall b. ((a in F and " + pred_text("a", "b") + ") -> b in F))";
    const std::string clo = "(forall b. ((" + pred_text("#{}", "b") + ") -> b in F))";
    const std::string pseudo =
        "(n = #{} or forall F. ((" + her + " and " + clo + ") -> n in F))";
    return "forall n. (" + pseudo + " -> exists m. " + pred_text("n", "m") + ")";
}

std::string inf_text() {
    // S is a total injective successor map landing in singleton extensions;
    // N is the least S-inductive set containing ext({}); A, M, L equip N
    // with addition and multiplication graphs and an ordering satisfying the
    // finite arithmetic core relativized to N with ext({}) as zero.
    return
        "exists2 S:2. ("
        "(forall x. exists y. S(x, y))"
        " and (forall x. forall y. forall z. ((S(x, y) and S(x, z)) -> y = z))"
        " and (forall x. forall y. (S(x, y) -> exists Z. ((forall u. (u in Z <-> u = x)) and y = ext(Z))))"
        " and exists N. ("
        "ext({}) in N"
        " and (forall x. (x in N -> forall y. (S(x, y) -> y in N)))"
        " and (forall K. ((ext({}) in K and forall x. (x in K -> forall y. (S(x, y) -> y in K))) -> forall x. (x in N -> x in K)))"
        " and exists2 A:3. exists2 M:3. exists2 L:2. ("
        "(forall x. forall y. ((x in N and y in N) -> exists u. (u in N and A(x, y, u))))"
        " and (forall x. forall y. forall u. forall v. ((A(x, y, u) and A(x, y, v)) -> u = v))"
        " and (forall x. forall y. ((x in N and y in N) -> exists u. (u in N and M(x, y, u))))"
        " and (forall x. forall y. forall u. forall v. ((M(x, y, u) and M(x, y, v)) -> u = v))"
        " and (forall x. forall y. ((x in N and S(x, y)) -> not y = ext({})))"
        " and (forall x. forall y. forall u. (((x in N and y in N) and (S(x, u) and S(y, u))) -> x = y))"
        " and (forall x. ((x in N and not x = ext({})) -> exists w. (w in N and S(w, x))))"
        " and (forall x. (x in N -> A(x, ext({}), x)))"
        " and (forall x. forall y. forall u. forall v. forall w. ((((x in N and y in N) and S(y, u)) and (A(x, y, v) and S(v, w))) -> A(x, u, w)))"
        " and (forall x. (x in N -> M(x, ext({}), ext({}))))"
        " and (forall x. forall y. forall u. forall v. forall w. ((((x in N and y in N) and S(y, u)) and (M(x, y, v) and A(v, x, w))) -> M(x, u, w)))"
        " and (forall x. forall y. ((x in N and y in N) -> (L(x, y) <-> exists w. (w in N and A(x, w, y)))))"
        ")"
        ")"
        ")";
}

const std::vector<std::pair<std::string, std::string>> &sentence_texts() {
    static const std::vector<std::pair<std::string, std::string>> texts = {
        {"Q1", "forall x. not s(x) = 0"},
        {"Q2", "forall x. forall y. (s(x) = s(y) -> x = y)"},
        {"Q3", "forall x. (not x = 0 -> exists w. x = s(w))"},
        {"Q4", "forall x. x + 0 = x"},
        {"Q5", "forall x. forall y. x + s(y) = s(x + y)"},
        {"Q6", "forall x. x * 0 = 0"},
        {"Q7", "forall x. forall y. x * s(y) = (x * y) + x"},
        {"Q8", "forall x. forall y. (x <= y <-> exists z. x + z = y)"},
        {"Induction",
         "forall F. ((0 in F and forall n. (n in F -> s(n) in F)) -> forall n. n in F)"},
        {"HP", "forall X. forall Y. (#X = #Y <-> exists2 f:2. bijection(f, X, Y))"},
        {"BLV",
         "forall X. forall Y. (ext(X) = ext(Y) <-> forall u. (u in X <-> u in Y))"},
        {"Inf", inf_text()},
        {"SA", sa_text()},
    };
    return texts;
}

std::optional<BaseTheory> base_of_tag(const std::string &tag) {
    if (tag == "CA0")
        return BaseTheory::CA;
    if (tag == "HP0")
        return BaseTheory::HP;
    if (tag == "BL0")
        return BaseTheory::BL;
    return std::nullopt;
}

} // namespace

TheoryId parse_theory_id(const std::string &name) {
    if (name == "PA2")
        return TheoryId::pa2();
    if (name == "HP2")
        return TheoryId::hp2();
    if (name == "BL2")
        return TheoryId::bl2();
    if (name == "ACA0")
        return {BaseTheory::CA, SchemaLevel::Arithmetical, 0};
    if (name == "AHP0")
        return {BaseTheory::HP, SchemaLevel::Arithmetical, 0};
    if (name == "ABL0")
        return {BaseTheory::BL, SchemaLevel::Arithmetical, 0};
    const auto dash = name.find('-');
    if (dash != std::string::npos) {
        const std::string head = name.substr(0, dash);
        const auto base = base_of_tag(name.substr(dash + 1));
        if (base) {
            if (head == "Delta11")
                return {*base, SchemaLevel::Delta11, 0};
            if (head == "Sigma11AC")
                return {*base, SchemaLevel::Sigma11Choice, 0};
            if (head.size() > 3 && head.size() <= 5 && head.compare(0, 3, "Pi1") == 0) {
                const std::string digits = head.substr(3);
                if (digits.find_first_not_of("0123456789") == std::string::npos) {
                    const int n = std::stoi(digits);
                    if (n >= 1)
                        return {*base, SchemaLevel::Pi1n, n};
                }
            }
        }
    }
    throw Error("unknown_theory", "no theory named '" + name + "'");
}

std::string to_string(const TheoryId &id) {
    const std::string tag = id.base == BaseTheory::CA   ? "CA"
                            : id.base == BaseTheory::HP ? "HP"
                                                        : "BL";
    switch (id.level) {
    case SchemaLevel::Full:
        return id.base == BaseTheory::CA ? "PA2" : tag + "2";
    case SchemaLevel::Arithmetical:
        return "A" + tag + "0";
    case SchemaLevel::Delta11:
        return "Delta11-" + tag + "0";
    case SchemaLevel::Sigma11Choice:
        return "Sigma11AC-" + tag + "0";
    case SchemaLevel::Pi1n:
        return "Pi1" + std::to_string(id.n) + "-" + tag + "0";
    }
    throw Error("internal_error", "unhandled theory level");
}

FormulaPtr named_sentence(const std::string &name) {
    static const std::map<std::string, FormulaPtr> built = [] {
        std::map<std::string, FormulaPtr> m;
        for (const auto &[n, text] : sentence_texts())
            m.emplace(n, parse_formula(text));
        return m;
    }();
    const auto it = built.find(name);
    if (it == built.end())
        throw Error("unknown_sentence", "no sentence named '" + name + "'");
    return it->second;
}

std::vector<std::string> sentence_names() {
    std::vector<std::string> names;
    for (const auto &[n, text] : sentence_texts()) {
        (void)text;
        names.push_back(n);
    }
    return names;
}

TheoryAxioms theory_axioms(const TheoryId &id) {
    TheoryAxioms out;
    const auto add = [&](const std::string &name) {
        out.core.push_back({name, named_sentence(name)});
    };
    switch (id.base) {
    case BaseTheory::CA:
        for (int i = 1; i <= 8; ++i)
            add("Q" + std::to_string(i));
        add("Induction");
        break;
    case BaseTheory::HP:
        add("HP");
        break;
    case BaseTheory::BL:
        add("BLV");
        break;
    }
    switch (id.level) {
    case SchemaLevel::Full:
        out.schemas.push_back({SchemaKind::Comprehension, std::nullopt});
        break;
    case SchemaLevel::Arithmetical:
        out.schemas.push_back({SchemaKind::Comprehension, Classification::arithmetical()});
        break;
    case SchemaLevel::Delta11:
        out.schemas.push_back({SchemaKind::Delta11, std::nullopt});
        break;
    case SchemaLevel::Sigma11Choice:
        out.schemas.push_back({SchemaKind::Comprehension, Classification::arithmetical()});
        out.schemas.push_back({SchemaKind::Sigma11Choice, std::nullopt});
        break;
    case SchemaLevel::Pi1n:
        out.schemas.push_back({SchemaKind::Comprehension, Classification::pi(id.n)});
        break;
    }
    return out;
}

} // namespace sol
