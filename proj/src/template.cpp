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

#include "spvkit/template.h"

#include <memory>

#include "spvkit/error.h"

namespace spvkit {
namespace {

struct Node {
  enum class Kind { kText, kValue, kSection, kInverted };
  Kind kind = Kind::kText;
  std::string text;  // literal text or tag name
  std::vector<Node> children;
};

Error TemplateError(const std::string& message) {
  return Error(ErrorCode::kGeneration, "template: " + message);
}

struct Tag {
  std::size_t begin;  // position of "{{"
  std::size_t end;    // one past "}}"
  char sigil;         // '#', '^', '/', '!' or 0
  std::string name;
};

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

// Tokenizes and applies the standalone-line rule.
std::vector<Node> Parse(std::string_view text) {
  std::vector<Node> root;
  std::vector<std::vector<Node>*> stack{&root};
  std::vector<std::string> open;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t begin = text.find("{{", pos);
    if (begin == std::string_view::npos) {
      stack.back()->push_back({Node::Kind::kText, std::string(text.substr(pos)), {}});
      break;
    }
    std::size_t close = text.find("}}", begin + 2);
    if (close == std::string_view::npos) {
      throw TemplateError("unterminated tag");
    }
    Tag tag{begin, close + 2, 0, ""};
    std::string_view inner = text.substr(begin + 2, close - begin - 2);
    if (!inner.empty() && std::string_view("#^/!").find(inner[0]) !=
                              std::string_view::npos) {
      tag.sigil = inner[0];
      inner.remove_prefix(1);
    }
    while (!inner.empty() && inner.front() == ' ') inner.remove_prefix(1);
    while (!inner.empty() && inner.back() == ' ') inner.remove_suffix(1);
    tag.name = std::string(inner);

    std::size_t text_end = begin;
    std::size_t next = tag.end;
    if (tag.sigil != 0) {
      std::size_t line_start = text.rfind('\n', begin);
      line_start = line_start == std::string_view::npos ? 0 : line_start + 1;
      std::size_t line_end = text.find('\n', tag.end);
      std::size_t after = line_end == std::string_view::npos ? text.size()
                                                             : line_end;
      if (line_start >= pos &&
          IsBlank(text.substr(line_start, begin - line_start)) &&
          IsBlank(text.substr(tag.end, after - tag.end))) {
        text_end = line_start;
        next = line_end == std::string_view::npos ? text.size() : line_end + 1;
      }
    }
    if (text_end > pos) {
      stack.back()->push_back(
          {Node::Kind::kText, std::string(text.substr(pos, text_end - pos)), {}});
    }
    pos = next;

    switch (tag.sigil) {
      case '!':
        break;
      case '#':
      case '^': {
        Node section{tag.sigil == '#' ? Node::Kind::kSection
                                      : Node::Kind::kInverted,
                     tag.name, {}};
        stack.back()->push_back(std::move(section));
        stack.push_back(&stack.back()->back().children);
        open.push_back(tag.name);
        break;
      }
      case '/':
        if (open.empty() || open.back() != tag.name) {
          throw TemplateError("unbalanced section end '" + tag.name + "'");
        }
        open.pop_back();
        stack.pop_back();
        break;
      default:
        if (tag.name.empty()) throw TemplateError("empty tag");
        stack.back()->push_back({Node::Kind::kValue, tag.name, {}});
    }
  }
  if (!open.empty()) throw TemplateError("unclosed section '" + open.back() + "'");
  return root;
}

using Scope = std::vector<const TemplateContext*>;

const std::string& LookupValue(const Scope& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    auto found = (*it)->values.find(name);
    if (found != (*it)->values.end()) return found->second;
  }
  throw TemplateError("no value named '" + name + "'");
}

const std::vector<TemplateContext>* LookupList(const Scope& scope,
                                               const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    auto found = (*it)->lists.find(name);
    if (found != (*it)->lists.end()) return &found->second;
  }
  return nullptr;
}

void Render(const std::vector<Node>& nodes, Scope& scope, std::string& out) {
  for (const Node& node : nodes) {
    switch (node.kind) {
      case Node::Kind::kText:
        out += node.text;
        break;
      case Node::Kind::kValue:
        out += LookupValue(scope, node.text);
        break;
      case Node::Kind::kSection: {
        const auto* list = LookupList(scope, node.text);
        if (!list) throw TemplateError("no list named '" + node.text + "'");
        for (const TemplateContext& item : *list) {
          scope.push_back(&item);
          Render(node.children, scope, out);
          scope.pop_back();
        }
        break;
      }
      case Node::Kind::kInverted: {
        const auto* list = LookupList(scope, node.text);
        if (!list || list->empty()) Render(node.children, scope, out);
        break;
      }
    }
  }
}

}  // namespace

std::string RenderTemplate(std::string_view text,
                           const TemplateContext& context) {
  std::vector<Node> nodes = Parse(text);
  Scope scope{&context};
  std::string out;
  Render(nodes, scope, out);
  return out;
}

}  // namespace spvkit
