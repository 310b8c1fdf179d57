#include "sol/names.hpp"

#include <cctype>
#include <set>

namespace sol {

bool is_reserved_word(const std::string &name) {
    static const std::set<std::string> reserved = {
        "not",  "and",  "or",       "in",       "forall",    "exists", "forall2",
        "exists2", "rel", "s",      "ext",      "card",      "infinite", "bijection",
        "Zero"};
    return reserved.count(name) > 0;
}

bool is_object_var_name(const std::string &name) {
    if (name.empty() || is_reserved_word(name)) return false;
    if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

bool is_plain_relation_name(const std::string &name) {
    if (name.empty() || is_reserved_word(name)) return false;
    if (!std::isupper(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_relation_var_name(const std::string &name) {
    if (name.empty() || is_reserved_word(name)) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace sol
