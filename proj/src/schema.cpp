#include "sol/schema.hpp"

#include "sol/classify.hpp"
#include "sol/error.hpp"

#include <algorithm>

namespace sol {

namespace {

void check_tuple(const std::vector<std::string> &tuple) {
    if (tuple.empty()) throw Error("arity_mismatch", "schema instance needs a nonempty tuple");
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                throw Error("arity_mismatch", "duplicate tuple variable " + tuple[i]);
}

FormulaPtr forall_tuple(FormulaPtr body, const std::vector<std::string> &tuple) {
    for (auto it = tuple.rbegin(); it != tuple.rend(); ++it)
        body = f_forall_obj(*it, close_obj(body, *it));
    return body;
}

std::string fresh_relation_name(const FormulaPtr &phi, const std::string &base) {
    auto free = free_relation_vars(phi);
    std::string name = base;
    int i = 0;
    while (free.count(name)) name = base + std::to_string(++i);
    return name;
}

} // namespace

FormulaPtr instantiate_comprehension(const FormulaPtr &phi, const std::string &rel,
                                     const std::vector<std::string> &tuple) {
    check_tuple(tuple);
    if (has_free_relation_var(phi, rel))
        throw Error("relation_not_fresh",
                    "relation variable " + rel + " occurs free in the comprehension body");
    int arity = static_cast<int>(tuple.size());
    std::vector<TermPtr> args;
    for (const std::string &v : tuple) args.push_back(t_free_obj(v));
    FormulaPtr body = f_iff(f_member(std::move(args), t_free_rel(rel, arity)), phi);
    body = forall_tuple(body, tuple);
    return f_exists_rel(rel, arity, close_rel(body, rel));
}

FormulaPtr instantiate_delta11(const FormulaPtr &phi, const FormulaPtr &psi,
                               const std::string &rel, const std::vector<std::string> &tuple) {
    check_tuple(tuple);
    Classification cphi = classify(phi);
    if (!subclass_of(cphi, Classification::sigma(1)))
        throw Error("classification_violation",
                    "phi must be Sigma(1) or lower, got " + to_string(cphi));
    Classification cpsi = classify(psi);
    if (!subclass_of(cpsi, Classification::pi(1)))
        throw Error("classification_violation",
                    "psi must be Pi(1) or lower, got " + to_string(cpsi));
    if (has_free_relation_var(phi, rel) || has_free_relation_var(psi, rel))
        throw Error("relation_not_fresh",
                    "relation variable " + rel + " occurs free in a schema body");
    FormulaPtr hypothesis = forall_tuple(f_iff(phi, psi), tuple);
    return f_implies(hypothesis, instantiate_comprehension(phi, rel, tuple));
}

FormulaPtr instantiate_choice(const FormulaPtr &phi, const std::vector<std::string> &tuple,
                              const std::string &set_var) {
    check_tuple(tuple);
    Classification cphi = classify(phi);
    if (!subclass_of(cphi, Classification::sigma(1)))
        throw Error("classification_violation",
                    "phi must be Sigma(1) or lower, got " + to_string(cphi));
    auto free = free_relation_vars(phi);
    auto it = free.find(set_var);
    if (it == free.end())
        throw Error("missing_variable", "set variable " + set_var + " is not free in phi");
    if (it->second != 1)
        throw Error("arity_mismatch", "set variable " + set_var + " must have arity 1, has " +
                                          std::to_string(it->second));

    std::string rel = fresh_relation_name(phi, "R");
    int n = static_cast<int>(tuple.size());

    // Antecedent: forall tuple exists P phi.
    FormulaPtr antecedent = forall_tuple(f_exists_rel(set_var, 1, close_rel(phi, set_var)), tuple);

    // Columns condition: forall m (m in P <-> R(tuple, m)), with m fresh.
    std::string m = "m";
    int suffix = 0;
    while (std::count(tuple.begin(), tuple.end(), m) || free_object_vars(phi).count(m))
        m = "m" + std::to_string(++suffix);
    std::vector<TermPtr> rel_args;
    for (const std::string &v : tuple) rel_args.push_back(t_free_obj(v));
    rel_args.push_back(t_free_obj(m));
    FormulaPtr columns =
        f_iff(f_member({t_free_obj(m)}, t_free_rel(set_var, 1)),
              f_member(std::move(rel_args), t_free_rel(rel, n + 1)));
    columns = f_forall_obj(m, close_obj(columns, m));

    FormulaPtr inner = f_implies(columns, phi);
    inner = f_forall_rel(set_var, 1, close_rel(inner, set_var));
    inner = forall_tuple(inner, tuple);
    FormulaPtr consequent = f_exists_rel(rel, n + 1, close_rel(inner, rel));

    return f_implies(antecedent, consequent);
}

} // namespace sol
