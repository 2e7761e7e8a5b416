/*
   Copyright 2026 The kappa-feq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <variant>

#include "kappafeq/sym_form.hpp"

namespace kappafeq {

using Parsed = std::variant<RatFunc, AdditiveMap, SymForm>;

/// Parses the shared expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ['-'|'+'] primary ['^' ['-'] int]
///   primary:= int | 't' | 'D' | 'id' | '(' expr ')' | map '(' '{' int (',' int)* '}' ')'
/// '^' binds tighter than '*' and '/', which bind tighter than '+' and '-'.
/// The result type is inferred: slot sets make a form, bare maps an additive
/// map, anything else a field element. Throws ParseError with a position.
Parsed parse_expr(const std::string& text);

/// Typed entry points with diagnostics when the text is of the wrong kind.
RatFunc parse_ratfunc(const std::string& text);
AdditiveMap parse_map(const std::string& text);
SymForm parse_form(const std::string& text);

}  // namespace kappafeq
