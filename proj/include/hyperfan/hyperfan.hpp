/*
hyperfan
Copyright 2026 The hyperfan authors

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

#include "hyperfan/corpus.hpp"
#include "hyperfan/embedder.hpp"
#include "hyperfan/errors.hpp"
#include "hyperfan/graph.hpp"
#include "hyperfan/henneberg.hpp"
#include "hyperfan/isomorphism.hpp"
#include "hyperfan/json_io.hpp"
#include "hyperfan/pebble.hpp"
#include "hyperfan/render.hpp"
#include "hyperfan/rng.hpp"
#include "hyperfan/sphere.hpp"
#include "hyperfan/stress.hpp"
#include "hyperfan/tiling.hpp"
#include "hyperfan/vec3.hpp"
