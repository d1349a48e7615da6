// Copyright 2026 The htable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTABLE_TESTS_SUPPORT_FIXTURE_H_
#define HTABLE_TESTS_SUPPORT_FIXTURE_H_

#include <string>

#include "htable/model.h"

namespace htable::testing {

// Two regions of cities by year and season. Rows region/country/city,
// columns year/season; every year starts with a "&" (sum) column.
//
//              2020             2021
//            &   spr  aut     &   spr  aut
// Asia CHN PEK ...
//          SHA 250 131  119   ...
TableModel SeasonalFixture();
// Same table without the "&" columns.
TableModel StackedSeasonalFixture();

// Absolute path of a file under tests/data.
std::string DataPath(const std::string& name);
std::string ReadFile(const std::string& path);

}  // namespace htable::testing

#endif  // HTABLE_TESTS_SUPPORT_FIXTURE_H_
