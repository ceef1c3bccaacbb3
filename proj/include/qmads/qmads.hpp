/*
   Copyright 2026 The qmads Authors

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

#include "errors.hpp"
#include "rational.hpp"
#include "upoly.hpp"
#include "scalar.hpp"
#include "field.hpp"
#include "tensor.hpp"
#include "echelon.hpp"
#include "skewsym.hpp"
#include "braiding.hpp"
#include "rmatrix_io.hpp"
#include "freealg.hpp"
#include "ideal.hpp"
#include "pbw.hpp"
#include "algebras.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "charpoly.hpp"
#include "series.hpp"
#include "yangian.hpp"
#include "dsreduction.hpp"
