// Copyright 2026 The braidkit Authors
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


#ifndef BRAIDKIT_BRAIDKIT_H
#define BRAIDKIT_BRAIDKIT_H

#include "braidkit/braid.h"
#include "braidkit/closed_forms.h"
#include "braidkit/definition_transform.h"
#include "braidkit/encoding.h"
#include "braidkit/json_io.h"
#include "braidkit/majorana.h"
#include "braidkit/matrix.h"
#include "braidkit/synthesis.h"

#endif  // BRAIDKIT_BRAIDKIT_H
