// Copyright 2026 The layoutweave Authors.
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


#pragma once

#include "layoutweave/assembly/clustering.hpp"
#include "layoutweave/assembly/grouping.hpp"
#include "layoutweave/assembly/header_footer.hpp"
#include "layoutweave/assembly/ordering.hpp"
#include "layoutweave/assembly/page.hpp"
#include "layoutweave/assembly/params.hpp"
#include "layoutweave/core/error.hpp"
#include "layoutweave/core/geometry.hpp"
#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/labels.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/core/schema.hpp"
#include "layoutweave/exporters/chunks.hpp"
#include "layoutweave/exporters/dpbench.hpp"
#include "layoutweave/exporters/graph.hpp"
#include "layoutweave/exporters/markdown.hpp"
#include "layoutweave/exporters/render.hpp"
#include "layoutweave/ingest/clients.hpp"
#include "layoutweave/ingest/detections.hpp"
#include "layoutweave/ingest/enrich.hpp"
#include "layoutweave/ingest/entities.hpp"
#include "layoutweave/ingest/normalize.hpp"
#include "layoutweave/metrics/edit_distance.hpp"
#include "layoutweave/metrics/evaluate.hpp"
#include "layoutweave/metrics/table_tree.hpp"
#include "layoutweave/metrics/teds.hpp"
#include "layoutweave/pipeline/pipeline.hpp"
#include "layoutweave/util/ids.hpp"
#include "layoutweave/util/log.hpp"
#include "layoutweave/util/parallel.hpp"
#include "layoutweave/util/utf8.hpp"
