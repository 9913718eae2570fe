//! JSON structure files: sparse tensors keyed by name, with per-kind
//! dimension records. Values are exact rationals written as `"p/q"` or
//! `"n"`. Every parse error carries the JSON location it refers to.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra2::{AssocAlgebra, Bimodule, Homomorphism2, HomotopyDerivation, TwoTermAlgebra, TwoTermComplex};
use crate::cohom2::{Cochain1, Cochain2};
use crate::deform2::NijenhuisCandidate;
use crate::error::{input_err, Result};
use crate::exactlin::Rational;
use crate::ext2::Extension2;
use crate::rep2::Representation2;
use crate::tensor::{for_each_tuple, Tensor};
use crate::xmod::{CrossedModule, XCochain1, XCochain2, XModExtension, XModRepresentation, XNijenhuisCandidate};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Algebra2,
    Complex,
    Representation2,
    Cochain1,
    Cochain2,
    Homomorphism2,
    Derivation,
    Nijenhuis,
    CrossedModule,
    XmodRepresentation,
    XmodCochain1,
    XmodCochain,
    XmodNijenhuis,
    Extension2,
    XmodExtension,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra2 => "algebra2",
            Kind::Complex => "complex",
            Kind::Representation2 => "representation2",
            Kind::Cochain1 => "cochain1",
            Kind::Cochain2 => "cochain2",
            Kind::Homomorphism2 => "homomorphism2",
            Kind::Derivation => "derivation",
            Kind::Nijenhuis => "nijenhuis",
            Kind::CrossedModule => "crossed_module",
            Kind::XmodRepresentation => "xmod_representation",
            Kind::XmodCochain1 => "xmod_cochain1",
            Kind::XmodCochain => "xmod_cochain",
            Kind::XmodNijenhuis => "xmod_nijenhuis",
            Kind::Extension2 => "extension2",
            Kind::XmodExtension => "xmod_extension",
        }
    }
}

/// One nonzero entry of a sparse tensor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format_version: String,
    pub kind: Kind,
    pub dims: BTreeMap<String, usize>,
    pub tensors: BTreeMap<String, Vec<Entry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub index_sets: BTreeMap<String, Vec<usize>>,
}

pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() || t != s {
        return Err(format!("{s:?} is not a rational of the form \"p/q\""));
    }
    if let Some((_, den)) = t.split_once('/') {
        if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(format!("{s:?} has a zero denominator"));
        }
    }
    Rational::from_str(t).map_err(|_| format!("{s:?} is not a rational of the form \"p/q\""))
}

impl StructureFile {
    pub fn new(kind: Kind) -> Self {
        StructureFile {
            format_version: FORMAT_VERSION.to_string(),
            kind,
            dims: BTreeMap::new(),
            tensors: BTreeMap::new(),
            index_sets: BTreeMap::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: StructureFile = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            let msg = msg.split(" at line ").next().unwrap_or_default().to_string();
            input_err(format!("line {} column {}", e.line(), e.column()), msg)
        })?;
        if f.format_version != FORMAT_VERSION {
            return Err(input_err(
                "format_version",
                format!("unsupported version {:?}, expected {FORMAT_VERSION:?}", f.format_version),
            ));
        }
        Ok(f)
    }

    /// Deterministic JSON: fixed key order, one tensor entry per line, a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::from("{\n");
        out += &format!("  \"format_version\": {},\n", q(&self.format_version));
        out += &format!("  \"kind\": {},\n", q(self.kind.name()));
        let dims: Vec<String> = self.dims.iter().map(|(k, v)| format!("{}: {v}", q(k))).collect();
        out += &format!("  \"dims\": {{{}}},\n", dims.join(", "));
        let tensors: Vec<String> = self
            .tensors
            .iter()
            .map(|(k, entries)| {
                if entries.is_empty() {
                    return format!("    {}: []", q(k));
                }
                let rows: Vec<String> = entries
                    .iter()
                    .map(|e| format!("      {{\"indices\": {:?}, \"value\": {}}}", e.indices, q(&e.value)))
                    .collect();
                format!("    {}: [\n{}\n    ]", q(k), rows.join(",\n"))
            })
            .collect();
        out += &format!("  \"tensors\": {{\n{}\n  }}", tensors.join(",\n"));
        if !self.index_sets.is_empty() {
            let sets: Vec<String> = self.index_sets.iter().map(|(k, v)| format!("{}: {v:?}", q(k))).collect();
            out += &format!(",\n  \"index_sets\": {{{}}}", sets.join(", "));
        }
        out += "\n}\n";
        out
    }

    fn put_dim(&mut self, name: &str, n: usize) {
        self.dims.insert(name.to_string(), n);
    }

    fn put(&mut self, name: &str, t: &Tensor) {
        let entries =
            t.nonzero_entries().into_iter().map(|(indices, v)| Entry { indices, value: v.to_string() }).collect();
        self.tensors.insert(name.to_string(), entries);
    }

    fn put_set(&mut self, name: &str, idx: &[usize]) {
        self.index_sets.insert(name.to_string(), idx.to_vec());
    }
}

/// Reads a [`StructureFile`] and rejects anything it did not consume.
pub struct Reader<'a> {
    file: &'a StructureFile,
    used_dims: BTreeSet<String>,
    used_tensors: BTreeSet<String>,
    used_sets: BTreeSet<String>,
}

impl<'a> Reader<'a> {
    pub fn new(file: &'a StructureFile, kind: Kind) -> Result<Self> {
        if file.kind != kind {
            return Err(input_err("kind", format!("expected {:?}, found {:?}", kind.name(), file.kind.name())));
        }
        Ok(Reader { file, used_dims: BTreeSet::new(), used_tensors: BTreeSet::new(), used_sets: BTreeSet::new() })
    }

    pub fn dim(&mut self, name: &str) -> Result<usize> {
        self.used_dims.insert(name.to_string());
        self.file.dims.get(name).copied().ok_or_else(|| input_err(format!("dims.{name}"), "missing dimension"))
    }

    pub fn has_tensor(&self, name: &str) -> bool {
        self.file.tensors.contains_key(name)
    }

    /// Dense tensor of the given shape; a missing name means all zeros.
    pub fn tensor(&mut self, name: &str, shape: &[usize]) -> Result<Tensor> {
        self.used_tensors.insert(name.to_string());
        let mut t = Tensor::zeros(shape);
        let Some(entries) = self.file.tensors.get(name) else {
            return Ok(t);
        };
        let mut seen = BTreeSet::new();
        for (k, e) in entries.iter().enumerate() {
            let loc = format!("tensors.{name}[{k}]");
            if e.indices.len() != shape.len() {
                return Err(input_err(
                    format!("{loc}.indices"),
                    format!("has {} indices, tensor has rank {} (shape {shape:?})", e.indices.len(), shape.len()),
                ));
            }
            for (slot, (&i, &n)) in e.indices.iter().zip(shape).enumerate() {
                if i >= n {
                    return Err(input_err(
                        format!("{loc}.indices[{slot}]"),
                        format!("index {i} out of range for dimension {n}"),
                    ));
                }
            }
            if !seen.insert(e.indices.clone()) {
                return Err(input_err(format!("{loc}.indices"), format!("duplicate entry {:?}", e.indices)));
            }
            let v = parse_rational(&e.value).map_err(|m| input_err(format!("{loc}.value"), m))?;
            t.set(&e.indices, v);
        }
        Ok(t)
    }

    pub fn index_set(&mut self, name: &str, n: usize) -> Result<Vec<usize>> {
        self.used_sets.insert(name.to_string());
        let idx = self
            .file
            .index_sets
            .get(name)
            .ok_or_else(|| input_err(format!("index_sets.{name}"), "missing index set"))?;
        for (k, &i) in idx.iter().enumerate() {
            if i >= n {
                return Err(input_err(
                    format!("index_sets.{name}[{k}]"),
                    format!("index {i} out of range for dimension {n}"),
                ));
            }
            if idx[..k].contains(&i) {
                return Err(input_err(format!("index_sets.{name}[{k}]"), format!("index {i} listed twice")));
            }
        }
        Ok(idx.clone())
    }

    /// Fail on dims, tensors or index sets that were never read.
    pub fn finish(self) -> Result<()> {
        let f = self.file;
        if let Some(d) = f.dims.keys().find(|k| !self.used_dims.contains(*k)) {
            return Err(input_err(format!("dims.{d}"), format!("unknown dimension for kind {:?}", f.kind.name())));
        }
        if let Some(t) = f.tensors.keys().find(|k| !self.used_tensors.contains(*k)) {
            return Err(input_err(format!("tensors.{t}"), format!("unknown tensor for kind {:?}", f.kind.name())));
        }
        if let Some(s) = f.index_sets.keys().find(|k| !self.used_sets.contains(*k)) {
            return Err(input_err(
                format!("index_sets.{s}"),
                format!("unknown index set for kind {:?}", f.kind.name()),
            ));
        }
        Ok(())
    }
}

/// A value with a structure-file representation.
pub trait FileValue: Sized {
    const KIND: Kind;
    fn write(&self, f: &mut StructureFile);
    fn read(r: &mut Reader<'_>) -> Result<Self>;

    fn to_file(&self) -> StructureFile {
        let mut f = StructureFile::new(Self::KIND);
        self.write(&mut f);
        f
    }

    fn from_file(f: &StructureFile) -> Result<Self> {
        let mut r = Reader::new(f, Self::KIND)?;
        let v = Self::read(&mut r)?;
        r.finish()?;
        Ok(v)
    }

    fn to_json(&self) -> String {
        self.to_file().to_json()
    }

    fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&StructureFile::from_json(text)?)
    }
}

fn write_algebra(f: &mut StructureFile, prefix: &str, g: &TwoTermAlgebra) {
    f.put_dim(&format!("{prefix}n0"), g.dim0());
    f.put_dim(&format!("{prefix}n1"), g.dim1());
    f.put(&format!("{prefix}d"), &g.complex.diff);
    f.put(&format!("{prefix}l2_00"), &g.l2_00);
    f.put(&format!("{prefix}l2_01"), &g.l2_01);
    f.put(&format!("{prefix}l2_10"), &g.l2_10);
    f.put(&format!("{prefix}l3"), &g.l3);
}

fn read_algebra(r: &mut Reader<'_>, prefix: &str) -> Result<TwoTermAlgebra> {
    let n0 = r.dim(&format!("{prefix}n0"))?;
    let n1 = r.dim(&format!("{prefix}n1"))?;
    Ok(TwoTermAlgebra {
        complex: TwoTermComplex { diff: r.tensor(&format!("{prefix}d"), &[n1, n0])? },
        l2_00: r.tensor(&format!("{prefix}l2_00"), &[n0, n0, n0])?,
        l2_01: r.tensor(&format!("{prefix}l2_01"), &[n0, n1, n1])?,
        l2_10: r.tensor(&format!("{prefix}l2_10"), &[n1, n0, n1])?,
        l3: r.tensor(&format!("{prefix}l3"), &[n0, n0, n0, n1])?,
    })
}

fn write_xmod(f: &mut StructureFile, prefix: &str, x: &CrossedModule) {
    f.put_dim(&format!("{prefix}p"), x.dim_p());
    f.put_dim(&format!("{prefix}h"), x.dim_h());
    f.put(&format!("{prefix}mul"), &x.p_alg.mul);
    f.put(&format!("{prefix}left"), &x.h_mod.left);
    f.put(&format!("{prefix}right"), &x.h_mod.right);
    f.put(&format!("{prefix}f"), &x.f_map);
}

fn read_xmod(r: &mut Reader<'_>, prefix: &str) -> Result<CrossedModule> {
    let p = r.dim(&format!("{prefix}p"))?;
    let h = r.dim(&format!("{prefix}h"))?;
    Ok(CrossedModule {
        p_alg: AssocAlgebra { mul: r.tensor(&format!("{prefix}mul"), &[p, p, p])? },
        h_mod: Bimodule {
            left: r.tensor(&format!("{prefix}left"), &[p, h, h])?,
            right: r.tensor(&format!("{prefix}right"), &[h, p, h])?,
        },
        f_map: r.tensor(&format!("{prefix}f"), &[h, p])?,
    })
}

impl FileValue for TwoTermAlgebra {
    const KIND: Kind = Kind::Algebra2;
    fn write(&self, f: &mut StructureFile) {
        write_algebra(f, "", self);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        read_algebra(r, "")
    }
}

impl FileValue for TwoTermComplex {
    const KIND: Kind = Kind::Complex;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("m0", self.dim0());
        f.put_dim("m1", self.dim1());
        f.put("d", &self.diff);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (m0, m1) = (r.dim("m0")?, r.dim("m1")?);
        Ok(TwoTermComplex { diff: r.tensor("d", &[m1, m0])? })
    }
}

impl FileValue for Representation2 {
    const KIND: Kind = Kind::Representation2;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("n0", self.left0_v0.shape()[0]);
        f.put_dim("n1", self.left1.shape()[0]);
        f.put_dim("m0", self.dim0());
        f.put_dim("m1", self.dim1());
        f.put("del", &self.complex.diff);
        f.put("left0_v0", &self.left0_v0);
        f.put("left0_v1", &self.left0_v1);
        f.put("right0_v0", &self.right0_v0);
        f.put("right0_v1", &self.right0_v1);
        f.put("left1", &self.left1);
        f.put("right1", &self.right1);
        f.put("tri_l", &self.tri_l);
        f.put("tri_m", &self.tri_m);
        f.put("tri_r", &self.tri_r);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1, m0, m1) = (r.dim("n0")?, r.dim("n1")?, r.dim("m0")?, r.dim("m1")?);
        Ok(Representation2 {
            complex: TwoTermComplex { diff: r.tensor("del", &[m1, m0])? },
            left0_v0: r.tensor("left0_v0", &[n0, m0, m0])?,
            left0_v1: r.tensor("left0_v1", &[n0, m1, m1])?,
            right0_v0: r.tensor("right0_v0", &[m0, n0, m0])?,
            right0_v1: r.tensor("right0_v1", &[m1, n0, m1])?,
            left1: r.tensor("left1", &[n1, m0, m1])?,
            right1: r.tensor("right1", &[m0, n1, m1])?,
            tri_l: r.tensor("tri_l", &[n0, n0, m0, m1])?,
            tri_m: r.tensor("tri_m", &[n0, m0, n0, m1])?,
            tri_r: r.tensor("tri_r", &[m0, n0, n0, m1])?,
        })
    }
}

impl FileValue for Cochain1 {
    const KIND: Kind = Kind::Cochain1;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("n0", self.phi.shape()[0]);
        f.put_dim("n1", self.phi1.shape()[0]);
        f.put_dim("m0", self.phi.out_dim());
        f.put_dim("m1", self.phi1.out_dim());
        f.put("phi", &self.phi);
        f.put("phi1", &self.phi1);
        f.put("chi", &self.chi);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1, m0, m1) = (r.dim("n0")?, r.dim("n1")?, r.dim("m0")?, r.dim("m1")?);
        Ok(Cochain1 {
            phi: r.tensor("phi", &[n0, m0])?,
            phi1: r.tensor("phi1", &[n1, m1])?,
            chi: r.tensor("chi", &[n0, n0, m1])?,
        })
    }
}

/// A 2-cochain, optionally with the second-order `θ2` of a deformation.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain2File {
    pub cochain: Cochain2,
    pub theta2: Option<Tensor>,
}

impl FileValue for Cochain2File {
    const KIND: Kind = Kind::Cochain2;
    fn write(&self, f: &mut StructureFile) {
        let c = &self.cochain;
        f.put_dim("n0", c.omega.shape()[0]);
        f.put_dim("n1", c.psi.shape()[0]);
        f.put_dim("m0", c.psi.out_dim());
        f.put_dim("m1", c.mu.out_dim());
        f.put("psi", &c.psi);
        f.put("omega", &c.omega);
        f.put("mu", &c.mu);
        f.put("nu", &c.nu);
        f.put("theta", &c.theta);
        if let Some(t) = &self.theta2 {
            f.put("theta2", t);
        }
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1, m0, m1) = (r.dim("n0")?, r.dim("n1")?, r.dim("m0")?, r.dim("m1")?);
        let cochain = Cochain2 {
            psi: r.tensor("psi", &[n1, m0])?,
            omega: r.tensor("omega", &[n0, n0, m0])?,
            mu: r.tensor("mu", &[n0, n1, m1])?,
            nu: r.tensor("nu", &[n1, n0, m1])?,
            theta: r.tensor("theta", &[n0, n0, n0, m1])?,
        };
        let theta2 = if r.has_tensor("theta2") { Some(r.tensor("theta2", &[n0, n0, n0, m1])?) } else { None };
        Ok(Cochain2File { cochain, theta2 })
    }
}

impl FileValue for Cochain2 {
    const KIND: Kind = Kind::Cochain2;
    fn write(&self, f: &mut StructureFile) {
        Cochain2File { cochain: self.clone(), theta2: None }.write(f)
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let c = Cochain2File::read(r)?;
        if c.theta2.is_some() {
            return Err(input_err("tensors.theta2", "a second-order term is only accepted by `deform check`"));
        }
        Ok(c.cochain)
    }
}

impl FileValue for Homomorphism2 {
    const KIND: Kind = Kind::Homomorphism2;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("src_n0", self.f0.shape()[0]);
        f.put_dim("src_n1", self.f1.shape()[0]);
        f.put_dim("tgt_n0", self.f0.out_dim());
        f.put_dim("tgt_n1", self.f1.out_dim());
        f.put("f0", &self.f0);
        f.put("f1", &self.f1);
        f.put("f2", &self.f2);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1, m0, m1) = (r.dim("src_n0")?, r.dim("src_n1")?, r.dim("tgt_n0")?, r.dim("tgt_n1")?);
        Ok(Homomorphism2 {
            f0: r.tensor("f0", &[n0, m0])?,
            f1: r.tensor("f1", &[n1, m1])?,
            f2: r.tensor("f2", &[n0, n0, m1])?,
        })
    }
}

impl FileValue for HomotopyDerivation {
    const KIND: Kind = Kind::Derivation;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("n0", self.d0.shape()[0]);
        f.put_dim("n1", self.d1.shape()[0]);
        f.put("D0", &self.d0);
        f.put("D1", &self.d1);
        f.put("D2", &self.d2);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1) = (r.dim("n0")?, r.dim("n1")?);
        Ok(HomotopyDerivation {
            d0: r.tensor("D0", &[n0, n0])?,
            d1: r.tensor("D1", &[n1, n1])?,
            d2: r.tensor("D2", &[n0, n0, n1])?,
        })
    }
}

impl FileValue for NijenhuisCandidate {
    const KIND: Kind = Kind::Nijenhuis;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("n0", self.n0.shape()[0]);
        f.put_dim("n1", self.n1.shape()[0]);
        f.put("N0", &self.n0);
        f.put("N1", &self.n1);
        f.put("N2", &self.n2);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (n0, n1) = (r.dim("n0")?, r.dim("n1")?);
        Ok(NijenhuisCandidate {
            n0: r.tensor("N0", &[n0, n0])?,
            n1: r.tensor("N1", &[n1, n1])?,
            n2: r.tensor("N2", &[n0, n0, n1])?,
        })
    }
}

impl FileValue for CrossedModule {
    const KIND: Kind = Kind::CrossedModule;
    fn write(&self, f: &mut StructureFile) {
        write_xmod(f, "", self);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        read_xmod(r, "")
    }
}

impl FileValue for XModRepresentation {
    const KIND: Kind = Kind::XmodRepresentation;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("p", self.v_mod.algebra_dim());
        f.put_dim("h", self.tr_l.shape()[1]);
        f.put_dim("v", self.dim_v());
        f.put_dim("w", self.dim_w());
        f.put("v_left", &self.v_mod.left);
        f.put("v_right", &self.v_mod.right);
        f.put("w_left", &self.w_mod.left);
        f.put("w_right", &self.w_mod.right);
        f.put("phi", &self.phi);
        f.put("tr_l", &self.tr_l);
        f.put("tr_r", &self.tr_r);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (p, h, v, w) = (r.dim("p")?, r.dim("h")?, r.dim("v")?, r.dim("w")?);
        Ok(XModRepresentation {
            v_mod: Bimodule { left: r.tensor("v_left", &[p, v, v])?, right: r.tensor("v_right", &[v, p, v])? },
            w_mod: Bimodule { left: r.tensor("w_left", &[p, w, w])?, right: r.tensor("w_right", &[w, p, w])? },
            phi: r.tensor("phi", &[v, w])?,
            tr_l: r.tensor("tr_l", &[w, h, v])?,
            tr_r: r.tensor("tr_r", &[h, w, v])?,
        })
    }
}

impl FileValue for XCochain1 {
    const KIND: Kind = Kind::XmodCochain1;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("p", self.n0.shape()[0]);
        f.put_dim("h", self.n1.shape()[0]);
        f.put_dim("w", self.n0.out_dim());
        f.put_dim("v", self.n1.out_dim());
        f.put("n0", &self.n0);
        f.put("n1", &self.n1);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (p, h, w, v) = (r.dim("p")?, r.dim("h")?, r.dim("w")?, r.dim("v")?);
        Ok(XCochain1 { n0: r.tensor("n0", &[p, w])?, n1: r.tensor("n1", &[h, v])? })
    }
}

impl FileValue for XCochain2 {
    const KIND: Kind = Kind::XmodCochain;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("p", self.omega.shape()[0]);
        f.put_dim("h", self.psi.shape()[0]);
        f.put_dim("w", self.psi.out_dim());
        f.put_dim("v", self.mu.out_dim());
        f.put("psi", &self.psi);
        f.put("omega", &self.omega);
        f.put("mu", &self.mu);
        f.put("nu", &self.nu);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (p, h, w, v) = (r.dim("p")?, r.dim("h")?, r.dim("w")?, r.dim("v")?);
        Ok(XCochain2 {
            psi: r.tensor("psi", &[h, w])?,
            omega: r.tensor("omega", &[p, p, w])?,
            mu: r.tensor("mu", &[p, h, v])?,
            nu: r.tensor("nu", &[h, p, v])?,
        })
    }
}

impl FileValue for XNijenhuisCandidate {
    const KIND: Kind = Kind::XmodNijenhuis;
    fn write(&self, f: &mut StructureFile) {
        f.put_dim("p", self.n0.shape()[0]);
        f.put_dim("h", self.n1.shape()[0]);
        f.put("N0", &self.n0);
        f.put("N1", &self.n1);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let (p, h) = (r.dim("p")?, r.dim("h")?);
        Ok(XNijenhuisCandidate { n0: r.tensor("N0", &[p, p])?, n1: r.tensor("N1", &[h, h])? })
    }
}

impl FileValue for Extension2 {
    const KIND: Kind = Kind::Extension2;
    fn write(&self, f: &mut StructureFile) {
        write_algebra(f, "total.", &self.total);
        write_algebra(f, "base.", &self.base);
        f.put("p0", &self.p0);
        f.put("p1", &self.p1);
        f.put("s0", &self.s0);
        f.put("s1", &self.s1);
        f.put_set("sub0", &self.sub0);
        f.put_set("sub1", &self.sub1);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let total = read_algebra(r, "total.")?;
        let base = read_algebra(r, "base.")?;
        let (nn0, nn1, n0, n1) = (total.dim0(), total.dim1(), base.dim0(), base.dim1());
        Ok(Extension2 {
            sub0: r.index_set("sub0", nn0)?,
            sub1: r.index_set("sub1", nn1)?,
            p0: r.tensor("p0", &[nn0, n0])?,
            p1: r.tensor("p1", &[nn1, n1])?,
            s0: r.tensor("s0", &[n0, nn0])?,
            s1: r.tensor("s1", &[n1, nn1])?,
            total,
            base,
        })
    }
}

impl FileValue for XModExtension {
    const KIND: Kind = Kind::XmodExtension;
    fn write(&self, f: &mut StructureFile) {
        write_xmod(f, "total.", &self.total);
        write_xmod(f, "base.", &self.base);
        f.put("p0", &self.p0);
        f.put("p1", &self.p1);
        f.put("s0", &self.s0);
        f.put("s1", &self.s1);
        f.put_set("sub0", &self.sub0);
        f.put_set("sub1", &self.sub1);
    }
    fn read(r: &mut Reader<'_>) -> Result<Self> {
        let total = read_xmod(r, "total.")?;
        let base = read_xmod(r, "base.")?;
        let (pp, hh, p, h) = (total.dim_p(), total.dim_h(), base.dim_p(), base.dim_h());
        Ok(XModExtension {
            sub0: r.index_set("sub0", pp)?,
            sub1: r.index_set("sub1", hh)?,
            p0: r.tensor("p0", &[pp, p])?,
            p1: r.tensor("p1", &[hh, h])?,
            s0: r.tensor("s0", &[p, pp])?,
            s1: r.tensor("s1", &[h, hh])?,
            total,
            base,
        })
    }
}

/// Dense JSON form of a tensor for reports: nested by leading index, leaves
/// are `"p/q"` strings.
pub fn tensor_json(t: &Tensor) -> serde_json::Value {
    fn nest(data: &[Rational], shape: &[usize]) -> serde_json::Value {
        match shape {
            [] => serde_json::Value::String(data[0].to_string()),
            [n, rest @ ..] => {
                let stride: usize = rest.iter().product();
                serde_json::Value::Array((0..*n).map(|i| nest(&data[i * stride..(i + 1) * stride], rest)).collect())
            }
        }
    }
    nest(t.data(), t.shape())
}

pub fn vector_json(v: &[Rational]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(|c| serde_json::Value::String(c.to_string())).collect())
}

/// Sparse JSON form of a tensor: the same entry list as in structure files.
pub fn sparse_json(t: &Tensor) -> serde_json::Value {
    let mut out = Vec::new();
    for_each_tuple(t.shape(), |ix| {
        let v = t.get(ix);
        if !v.is_zero() {
            out.push(serde_json::json!({ "indices": ix, "value": v.to_string() }));
        }
    });
    serde_json::Value::Array(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips() {
        for (_, g) in fixtures::algebras() {
            assert_eq!(TwoTermAlgebra::from_json(&g.to_json()).unwrap(), g);
        }
        let x = fixtures::fix_x_f();
        assert_eq!(CrossedModule::from_json(&x.to_json()).unwrap(), x);
        let g = fixtures::fix_r22();
        let text = g.to_json();
        let generic: StructureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(generic, g.to_file());
    }

    #[test]
    fn located_errors() {
        let g = fixtures::fix_u();
        let mut f = g.to_file();
        f.tensors.get_mut("l2_00").unwrap()[0].indices = vec![0, 3, 0];
        let e = TwoTermAlgebra::from_file(&f).unwrap_err();
        assert_eq!(e.to_string(), "tensors.l2_00[0].indices[1]: index 3 out of range for dimension 1");
        let mut f = g.to_file();
        f.tensors.get_mut("d").unwrap().push(Entry { indices: vec![0, 0], value: "1/0".into() });
        assert!(TwoTermAlgebra::from_file(&f).unwrap_err().to_string().contains("zero denominator"));
        let mut f = g.to_file();
        f.tensors.insert("extra".into(), vec![]);
        assert!(TwoTermAlgebra::from_file(&f).unwrap_err().to_string().starts_with("tensors.extra"));
        assert!(StructureFile::from_json("{\"format_version\": \"1\"}").is_err());
        let mut f = g.to_file();
        let e = f.tensors.get_mut("l2_00").unwrap()[0].clone();
        f.tensors.get_mut("l2_00").unwrap().push(e);
        assert!(TwoTermAlgebra::from_file(&f).unwrap_err().to_string().contains("duplicate"));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), crate::exactlin::ratio(-1, 2));
        assert_eq!(parse_rational("4").unwrap(), crate::exactlin::rat(4));
        for bad in ["", " 1", "1/", "a", "1/0", "1.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
