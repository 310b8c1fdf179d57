#pragma once

#include <string>

namespace sol {

// Shared lexical rules for the surface syntax.
bool is_reserved_word(const std::string &name);
bool is_object_var_name(const std::string &name);     // [a-z][a-z0-9]*
bool is_plain_relation_name(const std::string &name); // [A-Z][A-Za-z0-9]*
bool is_relation_var_name(const std::string &name);   // either case, not reserved

} // namespace sol
