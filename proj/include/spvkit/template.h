// Copyright (c) 2026 The spvkit Authors
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

#ifndef SPVKIT_TEMPLATE_H_
#define SPVKIT_TEMPLATE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spvkit {

// Data for one template expansion. Lists nest: each item is itself a
// context, and lookups fall back to enclosing contexts.
struct TemplateContext {
  std::map<std::string, std::string, std::less<>> values;
  std::map<std::string, std::vector<TemplateContext>, std::less<>> lists;

  TemplateContext& Set(std::string key, std::string value) {
    values[std::move(key)] = std::move(value);
    return *this;
  }
  std::vector<TemplateContext>& List(const std::string& key) {
    return lists[key];
  }
};

// Placeholder syntax:
//   {{name}}              value substitution
//   {{#list}}...{{/list}} repeat once per item of list
//   {{^list}}...{{/list}} emit only when list is empty or absent
//   {{! text}}            comment, produces nothing
// A section or comment tag alone on its line removes the whole line.
// Unknown names and unbalanced sections throw Error(kGeneration).
std::string RenderTemplate(std::string_view text,
                           const TemplateContext& context);

}  // namespace spvkit

#endif  // SPVKIT_TEMPLATE_H_
