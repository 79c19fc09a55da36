// Copyright 2026 The hwr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/imaging.hpp"
#include "hwr/io.hpp"
#include "hwr/pipeline.hpp"
#include "hwr/recognition.hpp"
#include "hwr/render.hpp"
#include "hwr/sample_font.hpp"
#include "hwr/segmentation.hpp"
#include "hwr/templates.hpp"
