// Copyright 2026 The relinfo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELINFO_SDL_INTERNAL_HPP
#define RELINFO_SDL_INTERNAL_HPP

#include <string>

#include "relinfo/sdl.hpp"

namespace relinfo::sdl::detail {

/// Shortest round-tripping rendering of a double.
std::string shortest_double(double v);

/// The claim part of an assert line, e.g. "relfact Z given CA = yes",
/// without the tol and note clauses. Used as the default description for
/// assertions written without a note.
std::string render_claim(const AssertStep& as);

} // namespace relinfo::sdl::detail

#endif // RELINFO_SDL_INTERNAL_HPP
