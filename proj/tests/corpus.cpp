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

#include "corpus.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <random>

#include "spvkit/spv.h"

namespace spvkit::testing {
namespace s = spvkit::spv;

namespace {

Module KernelPreamble(std::initializer_list<s::Capability> caps) {
  Module m = Module::Create(1, 2);
  for (const s::Capability& c : caps) m.Add(s::OpCapability{c});
  m.Add(s::OpMemoryModel{s::AddressingModel::Physical64(),
                         s::MemoryModel::OpenCL()});
  return m;
}

template <class T>
Word Bits32(T value) {
  Word w;
  std::memcpy(&w, &value, sizeof w);
  return w;
}

}  // namespace

Module MinimalKernel() {
  Module m = KernelPreamble({s::Capability::Addresses(),
                             s::Capability::Kernel()});
  const Id void_t = m.NextId();
  const Id fn_t = m.NextId();
  const Id main = m.NextId();
  const Id entry = m.NextId();
  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), main, "main", {}});
  m.Add(s::OpTypeVoid{void_t});
  m.Add(s::OpTypeFunction{fn_t, void_t, {}});
  Function& f = m.BeginFunction(
      s::OpFunction{void_t, main, s::FunctionControl::None(), fn_t});
  f.BeginBlock(entry).Add(s::OpReturn{});
  f.Add(s::OpFunctionEnd{});
  return m;
}

Module CapabilityListModule() {
  Module m = Module::Create(1, 2);
  m.Add(s::OpCapability{s::Capability::Addresses()});
  m.Add(s::OpCapability{s::Capability::Linkage()});
  m.Add(s::OpCapability{s::Capability::Kernel()});
  m.Add(s::OpCapability{s::Capability::Int64()});
  m.Add(s::OpCapability{s::Capability::Int8()});
  return m;
}

Module IfElseKernel() {
  Module m = KernelPreamble(
      {s::Capability::Addresses(), s::Capability::Linkage(),
       s::Capability::Kernel(), s::Capability::Int64(),
       s::Capability::Int8()});
  const Id void_t = m.NextId(), bool_t = m.NextId(), int_t = m.NextId();
  const Id ptr_t = m.NextId(), fn_t = m.NextId();
  const Id ten = m.NextId(), one = m.NextId(), two = m.NextId();
  const Id kernel = m.NextId(), a = m.NextId(), x = m.NextId();
  const Id entry = m.NextId(), cmp = m.NextId();
  const Id if_then = m.NextId(), if_else = m.NextId(), merge = m.NextId();

  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), kernel, "foo", {}});
  m.Add(s::OpName{kernel, "foo"});
  m.Add(s::OpName{a, "a"});
  m.Add(s::OpName{x, "x"});
  m.Add(s::OpName{cmp, "cmp"});
  m.Add(s::OpName{if_then, "ifThen"});
  m.Add(s::OpName{if_else, "ifElse"});
  m.Add(s::OpName{merge, "merge"});
  m.Add(s::OpTypeVoid{void_t});
  m.Add(s::OpTypeBool{bool_t});
  m.Add(s::OpTypeInt{int_t, 32, 0});
  m.Add(s::OpTypePointer{ptr_t, s::StorageClass::CrossWorkgroup(), int_t});
  m.Add(s::OpTypeFunction{fn_t, void_t, {ptr_t, int_t}});
  m.Add(s::OpConstant{int_t, ten, s::LiteralContextDependentNumber::Integer(
                                      10, 32)});
  m.Add(s::OpConstant{int_t, one,
                      s::LiteralContextDependentNumber::Integer(1, 32)});
  m.Add(s::OpConstant{int_t, two,
                      s::LiteralContextDependentNumber::Integer(2, 32)});

  Function& f = m.BeginFunction(
      s::OpFunction{void_t, kernel, s::FunctionControl::None(), fn_t});
  f.Add(s::OpFunctionParameter{ptr_t, a});
  f.Add(s::OpFunctionParameter{int_t, x});
  f.BeginBlock(entry)
      .Add(s::OpSGreaterThan{bool_t, cmp, x, ten})
      .Add(s::OpSelectionMerge{merge, s::SelectionControl::None()})
      .Add(s::OpBranchConditional{cmp, if_then, if_else, {}});
  f.BeginBlock(if_then)
      .Add(s::OpStore{a, one, std::nullopt})
      .Add(s::OpBranch{merge});
  f.BeginBlock(if_else)
      .Add(s::OpStore{a, two, std::nullopt})
      .Add(s::OpBranch{merge});
  f.BeginBlock(merge).Add(s::OpReturn{});
  f.Add(s::OpFunctionEnd{});
  return m;
}

Module AddKernel() {
  Module m = KernelPreamble({s::Capability::Addresses(),
                             s::Capability::Kernel(),
                             s::Capability::Int64()});
  const Id void_t = m.NextId(), int_t = m.NextId(), ptr_t = m.NextId();
  const Id fn_t = m.NextId(), kernel = m.NextId();
  const Id a = m.NextId(), b = m.NextId(), c = m.NextId();
  const Id entry = m.NextId(), lhs = m.NextId(), rhs = m.NextId();

  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), kernel, "add", {}});
  m.Add(s::OpExecutionMode{kernel, s::ExecutionMode::LocalSize(64, 1, 1)});
  m.Add(s::OpDecorate{a, s::Decoration::FuncParamAttr(
                             s::FunctionParameterAttribute::NoAlias())});
  m.Add(s::OpDecorate{c, s::Decoration::Alignment(4)});
  m.Add(s::OpTypeVoid{void_t});
  m.Add(s::OpTypeInt{int_t, 32, 0});
  m.Add(s::OpTypePointer{ptr_t, s::StorageClass::CrossWorkgroup(), int_t});
  m.Add(s::OpTypeFunction{fn_t, void_t, {ptr_t, ptr_t, ptr_t}});

  Function& f = m.BeginFunction(
      s::OpFunction{void_t, kernel, s::FunctionControl::None(), fn_t});
  f.Add(s::OpFunctionParameter{ptr_t, a});
  f.Add(s::OpFunctionParameter{ptr_t, b});
  f.Add(s::OpFunctionParameter{ptr_t, c});
  Block& block = f.BeginBlock(entry);
  block.Add(s::OpLoad{int_t, lhs, a, s::MemoryAccess::Aligned(4)});
  block.Add(s::OpLoad{int_t, rhs, b, s::MemoryAccess::Aligned(4)});
  const Id sum = m.NextId();
  block.Add(s::OpIAdd{int_t, sum, lhs, rhs});
  block.Add(s::OpStore{c, sum, s::MemoryAccess::Aligned(4) |
                                   s::MemoryAccess::Volatile()});
  block.Add(s::OpReturn{});
  f.Add(s::OpFunctionEnd{});
  return m;
}

Module DebugHeavyModule() {
  Module m = KernelPreamble({s::Capability::Addresses(),
                             s::Capability::Linkage(),
                             s::Capability::Kernel()});
  const Id ext = m.NextId(), file = m.NextId();
  const Id void_t = m.NextId(), float_t = m.NextId(), st = m.NextId();
  const Id fn_t = m.NextId(), kernel = m.NextId(), helper = m.NextId();
  const Id half = m.NextId(), entry = m.NextId(), result = m.NextId();
  const Id helper_entry = m.NextId();

  m.Add(s::OpExtInstImport{ext, "OpenCL.std"});
  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), kernel, "k", {}});
  m.Add(s::OpString{file, "kernel.cl"});
  m.Add(s::OpSource{s::SourceLanguage::OpenCL_C(), 120, file,
                    s::LiteralString(
                        "__kernel void k() {\n  // \"quoted\" \\ path\n}\n")});
  m.Add(s::OpSourceExtension{"cl_khr_fp16"});
  m.Add(s::OpName{kernel, "k"});
  m.Add(s::OpName{helper, "a b"});
  m.Add(s::OpName{half, "a_b"});
  m.Add(s::OpName{st, "1st struct"});
  m.Add(s::OpName{result, ""});
  m.Add(s::OpName{ext, "k"});
  m.Add(s::OpMemberName{st, 0, "first"});
  m.Add(s::OpMemberName{st, 1, "second"});
  m.Add(s::OpModuleProcessed{"spvkit-test"});
  m.Add(s::OpDecorate{helper, s::Decoration::LinkageAttributes(
                                  "helper", s::LinkageType::Export())});
  m.Add(s::OpTypeVoid{void_t});
  m.Add(s::OpTypeFloat{float_t, 32});
  m.Add(s::OpTypeStruct{st, {float_t, float_t}});
  m.Add(s::OpTypeFunction{fn_t, void_t, {}});
  m.Add(s::OpConstant{float_t, half,
                      s::LiteralContextDependentNumber::Float32(-0.5f)});

  Function& f = m.BeginFunction(
      s::OpFunction{void_t, kernel, s::FunctionControl::None(), fn_t});
  f.BeginBlock(entry)
      .Add(s::OpLine{file, 3, 5})
      .Add(s::OpExtInst{float_t, result, ext, 23, {half}})  // fabs
      .Add(s::OpNoLine{})
      .Add(s::OpReturn{});
  f.Add(s::OpFunctionEnd{});

  Function& g = m.BeginFunction(s::OpFunction{
      void_t, helper,
      s::FunctionControl::Inline() | s::FunctionControl::Pure(), fn_t});
  g.BeginBlock(helper_entry).Add(s::OpReturn{});
  g.Add(s::OpFunctionEnd{});
  return m;
}

Module Constant64Module() {
  Module m = KernelPreamble(
      {s::Capability::Addresses(), s::Capability::Kernel(),
       s::Capability::Int64(), s::Capability::Int16(),
       s::Capability::Int8(), s::Capability::Float16(),
       s::Capability::Float64()});
  using N = s::LiteralContextDependentNumber;
  const Id void_t = m.NextId(), u64 = m.NextId(), s32 = m.NextId();
  const Id i16 = m.NextId(), i8 = m.NextId(), f64 = m.NextId();
  const Id f16 = m.NextId(), fn_t = m.NextId();
  m.Add(s::OpTypeVoid{void_t});
  m.Add(s::OpTypeInt{u64, 64, 0});
  m.Add(s::OpTypeInt{s32, 32, 1});
  m.Add(s::OpTypeInt{i16, 16, 0});
  m.Add(s::OpTypeInt{i8, 8, 0});
  m.Add(s::OpTypeFloat{f64, 64});
  m.Add(s::OpTypeFloat{f16, 16});
  m.Add(s::OpTypeFunction{fn_t, void_t, {}});

  m.Add(s::OpConstant{u64, m.NextId(),
                      N::Integer(std::numeric_limits<std::uint64_t>::max(),
                                 64)});
  m.Add(s::OpConstant{u64, m.NextId(), N::Integer(std::uint64_t{1} << 40,
                                                  64)});
  m.Add(s::OpConstant{s32, m.NextId(),
                      N::Integer(static_cast<std::uint64_t>(-5), 32,
                                 Signedness::kSigned)});
  m.Add(s::OpConstant{i16, m.NextId(), N::Integer(0xBEEF, 16)});
  m.Add(s::OpConstant{i8, m.NextId(), N::Integer(200, 8)});
  m.Add(s::OpConstant{f64, m.NextId(), N::Float64(3.141592653589793)});
  m.Add(s::OpConstant{f64, m.NextId(), N::Float64(-0.0)});
  m.Add(s::OpConstant{f64, m.NextId(),
                      N::Float64(std::numeric_limits<double>::infinity())});
  m.Add(s::OpConstant{f64, m.NextId(),
                      N::Integer(0x7FF8000000000123ull, 64)});  // NaN payload
  m.Add(s::OpConstant{f16, m.NextId(), N{{0x3E00}}});            // 1.5
  m.Add(s::OpConstant{f16, m.NextId(), N{{0xFC00}}});            // -inf
  const Id spec = m.NextId();
  m.Add(s::OpSpecConstant{u64, spec, N::Integer(7, 64)});

  // OpSpecConstantOp carries the wrapped opcode's operands, which the
  // grammar leaves implicit.
  Instruction op;
  op.opcode = s::OpSpecConstantOp::kOpcode;
  op.class_attr = s::OpSpecConstantOp::kClass;
  op.result_type = u64;
  op.result_id = m.NextId();
  op.operands = {u64.value, op.result_id.value, s::OpIAdd::kOpcode,
                 spec.value, spec.value};
  op.referenced_ids = {u64, spec, spec};
  m.Add(op);

  const Id kernel = m.NextId(), entry = m.NextId(), low = m.NextId();
  const Id high = m.NextId(), done = m.NextId(), selector = m.NextId();
  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), kernel, "consts", {}});
  m.Add(s::OpConstant{s32, selector, N::Integer(1, 32)});
  Function& f = m.BeginFunction(
      s::OpFunction{void_t, kernel, s::FunctionControl::None(), fn_t});
  f.BeginBlock(entry)
      .Add(s::OpSelectionMerge{done, s::SelectionControl::None()})
      .Add(s::OpSwitch{selector, done, {{1, low}, {0xFFFFFFFF, high}}});
  f.BeginBlock(low).Add(s::OpBranch{done});
  f.BeginBlock(high).Add(s::OpBranch{done});
  f.BeginBlock(done).Add(s::OpReturn{});
  f.Add(s::OpFunctionEnd{});
  return m;
}

RandomBuild RandomModule(std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto chance = [&rng](double p) {
    return std::bernoulli_distribution(p)(rng);
  };
  using N = s::LiteralContextDependentNumber;

  RandomBuild out{Module::Create(1, static_cast<unsigned>(pick(7))), {}};
  Module& m = out.module;

  // Ids come from a shuffled pool so that id order and mention order
  // disagree.
  std::vector<Id> pool;
  const std::size_t pool_size = 200 + pick(200);
  for (std::size_t i = 0; i < pool_size; ++i) {
    if (chance(0.05)) {
      const Word pinned = static_cast<Word>(pool_size * 3 + pick(1000));
      if (!out.allocated.count(pinned)) {
        m.ReserveId(Id(pinned));
        out.allocated.insert(pinned);
        pool.push_back(Id(pinned));
        continue;
      }
    }
    Id id = m.NextId();
    out.allocated.insert(id.value);
    pool.push_back(id);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next = 0;
  auto id = [&]() { return pool.at(next++); };

  m.Add(s::OpCapability{s::Capability::Addresses()});
  m.Add(s::OpCapability{s::Capability::Kernel()});
  m.Add(s::OpCapability{s::Capability::Int64()});
  m.Add(s::OpMemoryModel{s::AddressingModel::Physical64(),
                         s::MemoryModel::OpenCL()});

  const Id void_t = id(), bool_t = id(), i32 = id(), i64 = id(), f32 = id();
  const Id void_fn = id(), int_fn = id();
  std::vector<Id> type_ids = {void_t, bool_t, i32, i64, f32};
  std::shuffle(type_ids.begin(), type_ids.end(), rng);
  for (Id t : type_ids) {
    if (t == void_t) m.Add(s::OpTypeVoid{t});
    if (t == bool_t) m.Add(s::OpTypeBool{t});
    if (t == i32) m.Add(s::OpTypeInt{t, 32, 0});
    if (t == i64) m.Add(s::OpTypeInt{t, 64, 0});
    if (t == f32) m.Add(s::OpTypeFloat{t, 32});
  }
  m.Add(s::OpTypeFunction{void_fn, void_t, {}});
  m.Add(s::OpTypeFunction{int_fn, i32, {i32}});

  std::vector<Id> values32, values64, floats, bools;
  const std::size_t constants = 3 + pick(12);
  for (std::size_t i = 0; i < constants; ++i) {
    const Id c = id();
    switch (pick(4)) {
      case 0:
        m.Add(s::OpConstant{i32, c, N::Integer(rng(), 32)});
        values32.push_back(c);
        break;
      case 1: {
        const std::uint64_t v = (std::uint64_t{rng()} << 32) | rng();
        m.Add(s::OpConstant{i64, c, N::Integer(v, 64)});
        values64.push_back(c);
        break;
      }
      case 2:
        m.Add(s::OpConstant{f32, c, N{{static_cast<Word>(rng())}}});
        floats.push_back(c);
        break;
      default:
        if (chance(0.5)) {
          m.Add(s::OpConstantTrue{bool_t, c});
        } else {
          m.Add(s::OpConstantFalse{bool_t, c});
        }
        bools.push_back(c);
        break;
    }
  }
  if (values32.empty()) {
    const Id c = id();
    m.Add(s::OpConstant{i32, c, N::Integer(1, 32)});
    values32.push_back(c);
  }
  if (bools.empty()) {
    const Id c = id();
    m.Add(s::OpConstantTrue{bool_t, c});
    bools.push_back(c);
  }

  // Helper functions: int32(int32).
  std::vector<Id> helpers;
  const std::size_t helper_count = pick(3);
  for (std::size_t h = 0; h < helper_count; ++h) {
    const Id fn = id(), param = id(), entry = id(), sum = id();
    Function& f = m.BeginFunction(
        s::OpFunction{i32, fn, s::FunctionControl::None(), int_fn});
    f.Add(s::OpFunctionParameter{i32, param});
    f.BeginBlock(entry)
        .Add(s::OpIAdd{i32, sum, param, values32[pick(values32.size())]})
        .Add(s::OpReturnValue{sum});
    f.Add(s::OpFunctionEnd{});
    helpers.push_back(fn);
  }

  const Id main = id();
  m.Add(s::OpEntryPoint{s::ExecutionModel::Kernel(), main, "main", {}});
  Function& f = m.BeginFunction(
      s::OpFunction{void_t, main, s::FunctionControl::None(), void_fn});
  const std::size_t block_count = 1 + pick(4);
  std::vector<Id> labels;
  for (std::size_t b = 0; b < block_count; ++b) labels.push_back(id());
  for (std::size_t b = 0; b < block_count; ++b) {
    Block& block = f.BeginBlock(labels[b]);
    std::vector<Id> local32 = values32;
    std::vector<Id> local_bools = bools;
    const std::size_t body = pick(8);
    for (std::size_t i = 0; i < body; ++i) {
      const Id r = id();
      switch (pick(6)) {
        case 0:
          block.Add(s::OpIAdd{i32, r, local32[pick(local32.size())],
                              local32[pick(local32.size())]});
          local32.push_back(r);
          break;
        case 1:
          block.Add(s::OpISub{i32, r, local32[pick(local32.size())],
                              local32[pick(local32.size())]});
          local32.push_back(r);
          break;
        case 2:
          block.Add(s::OpSLessThan{bool_t, r, local32[pick(local32.size())],
                                   local32[pick(local32.size())]});
          local_bools.push_back(r);
          break;
        case 3:
          block.Add(s::OpSelect{i32, r, local_bools[pick(local_bools.size())],
                                local32[pick(local32.size())],
                                local32[pick(local32.size())]});
          local32.push_back(r);
          break;
        case 4:
          if (!floats.empty()) {
            block.Add(s::OpFAdd{f32, r, floats[pick(floats.size())],
                                floats[pick(floats.size())]});
          } else {
            block.Add(s::OpIMul{i32, r, local32[0], local32[0]});
          }
          break;
        default:
          if (!helpers.empty()) {
            block.Add(s::OpFunctionCall{i32, r, helpers[pick(helpers.size())],
                                        {local32[pick(local32.size())]}});
            local32.push_back(r);
          } else {
            block.Add(s::OpIMul{i32, r, local32[0], local32[0]});
          }
          break;
      }
    }
    if (b + 1 == block_count) {
      block.Add(s::OpReturn{});
    } else if (b + 2 < block_count && chance(0.5)) {
      block.Add(s::OpBranchConditional{local_bools[pick(local_bools.size())],
                                       labels[b + 1], labels[b + 2], {}});
    } else {
      block.Add(s::OpBranch{labels[b + 1]});
    }
  }
  f.Add(s::OpFunctionEnd{});

  // Names, including ones that sanitize to the same text, start with a
  // digit or are empty.
  static const char* const kNames[] = {"x",      "y",  "x y", "x_y", "1st",
                                       "",       "main", "%",  "tmp",
                                       "tmp_0",  "a.b", "a_b", "42"};
  const std::size_t named = pick(next + 1);
  for (std::size_t i = 0; i < named; ++i) {
    m.Add(s::OpName{pool[pick(next)], kNames[pick(std::size(kNames))]});
  }
  return out;
}

std::vector<CorpusEntry> Corpus(std::size_t random_count) {
  std::vector<CorpusEntry> out = {
      {"minimal-kernel", MinimalKernel().Serialize()},
      {"capability-list", CapabilityListModule().Serialize()},
      {"if-else", IfElseKernel().Serialize()},
      {"iadd-kernel", AddKernel().Serialize()},
      {"debug-heavy", DebugHeavyModule().Serialize()},
      {"constants-64", Constant64Module().Serialize()},
  };
  for (std::size_t i = 0; i < random_count; ++i) {
    const auto seed = static_cast<std::uint32_t>(1000 + i);
    out.push_back({"random-" + std::to_string(seed),
                   RandomModule(seed).module.Serialize()});
  }
  return out;
}

}  // namespace spvkit::testing
