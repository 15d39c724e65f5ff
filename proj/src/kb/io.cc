// Copyright 2026 The Authors.
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

#include "genkb/kb/io.h"

#include <fstream>
#include <functional>
#include <string_view>
#include <vector>

namespace genkb {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

// Calls `handle(fields, line_number)` for every non-empty line. Returns the
// number of records seen.
std::size_t ForEachRecord(
    std::istream& in, const std::string& source, std::size_t arity,
    const std::function<void(const std::vector<std::string_view>&,
                             std::size_t)>& handle) {
  std::string line;
  std::size_t line_number = 0;
  std::size_t records = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != arity) {
      throw ParseError(source, line_number,
                       "expected " + std::to_string(arity) +
                           " tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    for (auto f : fields) {
      if (f.empty()) throw ParseError(source, line_number, "empty field");
    }
    handle(fields, line_number);
    ++records;
  }
  return records;
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open " + path.string());
  return in;
}

}  // namespace

KnowledgeBase ReadKb(std::istream& in, const std::string& source_name) {
  KnowledgeBase kb;
  const std::size_t records = ForEachRecord(
      in, source_name, 4,
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        auto label = ParseQuantLabel(f[3]);
        if (!label) {
          throw ParseError(source_name, line,
                           "invalid label '" + std::string(f[3]) + "'");
        }
        try {
          kb.Add(f[0], f[1], f[2], *label);
        } catch (const ConflictingLabelError&) {
          throw ParseError(source_name, line,
                           "conflicting label at line " + std::to_string(line));
        }
      });
  if (records == 0) throw ParseError(source_name, 0, "empty knowledge base file");
  return kb;
}

KnowledgeBase LoadKb(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ReadKb(in, path.string());
}

void WriteKb(const KnowledgeBase& kb, std::ostream& out) {
  for (const auto& [t, label] : kb.Canonical()) {
    out << t.source << '\t' << t.relation << '\t' << t.target << '\t'
        << ToString(label) << '\n';
  }
}

void SaveKb(const KnowledgeBase& kb, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  WriteKb(kb, out);
}

Taxonomy ReadTaxonomy(std::istream& in, const std::string& source_name) {
  std::vector<std::pair<std::string, std::string>> edges;
  ForEachRecord(in, source_name, 2,
                [&](const std::vector<std::string_view>& f, std::size_t line) {
                  if (f[0] == f[1]) {
                    throw ParseError(source_name, line,
                                     "entity is its own parent");
                  }
                  edges.emplace_back(std::string(f[0]), std::string(f[1]));
                });
  return Taxonomy::FromEdges(edges);
}

TypeMap ReadTypeMap(std::istream& in, const std::string& source_name) {
  TypeMap types;
  ForEachRecord(in, source_name, 2,
                [&](const std::vector<std::string_view>& f, std::size_t) {
                  types.Add(f[0], f[1]);
                });
  return types;
}

Schema ReadSchema(std::istream& in, const std::string& source_name,
                  const TypeMap& types) {
  Schema schema;
  const auto& known = types.type_vocabulary();
  ForEachRecord(
      in, source_name, 3,
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        for (std::size_t i = 1; i < 3; ++i) {
          if (known.count(std::string(f[i])) == 0) {
            throw ParseError(source_name, line,
                             "type '" + std::string(f[i]) +
                                 "' does not appear in the type map");
          }
        }
        schema.Add(f[0], f[1], f[2]);
      });
  return schema;
}

Background LoadBackground(const std::filesystem::path& taxonomy_path,
                          const std::filesystem::path& typemap_path,
                          const std::filesystem::path& schema_path) {
  Background bg;
  {
    auto in = OpenInput(taxonomy_path);
    bg.taxonomy = ReadTaxonomy(in, taxonomy_path.string());
  }
  {
    auto in = OpenInput(typemap_path);
    bg.types = ReadTypeMap(in, typemap_path.string());
  }
  {
    auto in = OpenInput(schema_path);
    bg.schema = ReadSchema(in, schema_path.string(), bg.types);
  }
  return bg;
}

void WriteTaxonomy(const Taxonomy& taxonomy, std::ostream& out) {
  for (const auto& [child, parent] : taxonomy.Edges()) {
    out << child << '\t' << parent << '\n';
  }
}

void WriteTypeMap(const TypeMap& types, std::ostream& out) {
  for (const auto& [entity, ts] : types.entries()) {
    for (const auto& t : ts) out << entity << '\t' << t << '\n';
  }
}

void WriteSchema(const Schema& schema, std::ostream& out) {
  for (const auto& [relation, pairs] : schema.relations()) {
    for (const auto& [d, r] : pairs) {
      out << relation << '\t' << d << '\t' << r << '\n';
    }
  }
}

}  // namespace genkb
