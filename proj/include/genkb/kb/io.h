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

#ifndef GENKB_KB_IO_H_
#define GENKB_KB_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

// Tab-separated, UTF-8. Empty lines are skipped; every other line must have
// exactly the expected number of fields.
//
//   kb:        source  relation  target  all|some|none
//   taxonomy:  child   parent
//   typemap:   entity  type
//   schema:    relation  domain-type  range-type

KnowledgeBase ReadKb(std::istream& in, const std::string& source_name);
KnowledgeBase LoadKb(const std::filesystem::path& path);

// Canonical form: triples sorted lexicographically, lower-case labels.
void WriteKb(const KnowledgeBase& kb, std::ostream& out);
void SaveKb(const KnowledgeBase& kb, const std::filesystem::path& path);

Taxonomy ReadTaxonomy(std::istream& in, const std::string& source_name);
TypeMap ReadTypeMap(std::istream& in, const std::string& source_name);
// Every type must be present in `types`.
Schema ReadSchema(std::istream& in, const std::string& source_name,
                  const TypeMap& types);

Background LoadBackground(const std::filesystem::path& taxonomy_path,
                          const std::filesystem::path& typemap_path,
                          const std::filesystem::path& schema_path);

void WriteTaxonomy(const Taxonomy& taxonomy, std::ostream& out);
void WriteTypeMap(const TypeMap& types, std::ostream& out);
void WriteSchema(const Schema& schema, std::ostream& out);

}  // namespace genkb

#endif  // GENKB_KB_IO_H_
