#pragma once

#include <string>

#include "ccc/lambda.hpp"
#include "ccc/syntax.hpp"

namespace ccc {

// Grammar
//   objects   T | NAME | obj '*' obj | obj '->' obj
//             '*' binds tighter than '->'; '*' left-, '->' right-associative
//   arrows    id[obj] | k[obj] | p1[obj,obj] | p2[obj,obj] | eps[obj,obj]
//             | NAME | term '.' term | '<' term ',' term '>'
//             | curry[obj,obj](term) | '(' term ')'
//             '.' is composition, the right operand applied first
//   signature one declaration per line:
//             object NAME
//             arrow NAME : obj |- obj
//             indeterminate NAME : T |- obj
//             '#' starts a comment

std::string print_object(const ObjectPtr& o);
std::string print_arrow(const ArrowPtr& t);
std::string print_type(const ArrowType& ty);
std::string print_lambda(const LambdaPtr& t);

Signature parse_signature(const std::string& text);

// Parses and type-checks a term over the signature. The result mentions the
// indeterminate iff the source text names it.
ArrowPtr parse_arrow(const std::string& text, const Signature& sig);

ObjectPtr parse_object(const std::string& text, const Signature& sig);

}  // namespace ccc
