//! The `hopfext/1` JSON spec format.
//!
//! ```text
//! { "schema": "hopfext/1", "name": …, "choices": [...],
//!   "hopf": { "basis": [...], "parity": [...], "mu": [...], "eta": [...],
//!             "delta": [...], "eps": [...], "antipode": [...]? },
//!   "gamma": [...], "lambda": [...], "sigma": [...]?, "beta": …? }
//! ```
//!
//! Matrices are flat row-major arrays (`rows = dim(target)`); numbers are JSON integers
//! or strings in the compact form `p/q` or `N:c0,c1,…`.

use serde_json::{json, Map, Value};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::examples::ExampleData;
use crate::gvect::{GObject, Mor};
use crate::hopfcore::HopfAlgebra;

use super::{Mode, Options, SCHEMA};

fn schema_err(pointer: &str, msg: impl Into<String>) -> Error {
    Error::Schema { pointer: pointer.to_string(), msg: msg.into() }
}

fn field<'a>(obj: &'a Map<String, Value>, ptr: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema_err(ptr, format!("missing field {key:?}")))
}

fn object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema_err(ptr, "expected an object"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema_err(ptr, "expected an array"))
}

/// A single number; `conductor` bounds the field it may live in.
pub fn number(v: &Value, ptr: &str, conductor: Option<u32>) -> Result<CycNum> {
    let x = match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| schema_err(ptr, "numbers must be integers or strings"))?;
            CycNum::int(i)
        }
        Value::String(s) => s.parse::<CycNum>().map_err(|e| schema_err(ptr, e.to_string()))?,
        _ => return Err(schema_err(ptr, "expected a number or a number string")),
    };
    if let Some(n) = conductor {
        if !x.lies_in(n) {
            return Err(Error::FieldTooSmall(format!("{ptr}: {x} is not in Q(ζ_{n})")));
        }
    }
    Ok(x)
}

fn entries(v: &Value, ptr: &str, len: usize, conductor: Option<u32>) -> Result<Vec<CycNum>> {
    let a = array(v, ptr)?;
    if a.len() != len {
        return Err(schema_err(ptr, format!("expected {len} entries, found {}", a.len())));
    }
    a.iter().enumerate().map(|(k, x)| number(x, &format!("{ptr}/{k}"), conductor)).collect()
}

fn matrix(v: &Value, ptr: &str, src: &GObject, dst: &GObject, conductor: Option<u32>) -> Result<Mor> {
    let e = entries(v, ptr, src.dim() * dst.dim(), conductor)?;
    Mor::new(src.clone(), dst.clone(), e).map_err(|err| schema_err(ptr, err.to_string()))
}

fn carrier(hv: &Map<String, Value>, opts: &Options) -> Result<GObject> {
    let basis = array(field(hv, "/hopf", "basis")?, "/hopf/basis")?;
    let labels = basis
        .iter()
        .enumerate()
        .map(|(k, b)| b.as_str().map(String::from).ok_or_else(|| schema_err(&format!("/hopf/basis/{k}"), "expected a string")))
        .collect::<Result<Vec<_>>>()?;
    if labels.is_empty() {
        return Err(schema_err("/hopf/basis", "basis must be non-empty"));
    }
    let parity = match hv.get("parity") {
        None => vec![0; labels.len()],
        Some(p) => {
            let a = array(p, "/hopf/parity")?;
            if a.len() != labels.len() {
                return Err(schema_err("/hopf/parity", format!("expected {} entries, found {}", labels.len(), a.len())));
            }
            a.iter()
                .enumerate()
                .map(|(k, x)| match x.as_u64() {
                    Some(b @ (0 | 1)) => Ok(b as u8),
                    _ => Err(schema_err(&format!("/hopf/parity/{k}"), "parity must be 0 or 1")),
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    if opts.mode == Some(Mode::Vect) {
        if let Some(k) = parity.iter().position(|&p| p == 1) {
            return Err(schema_err(&format!("/hopf/parity/{k}"), "odd basis vector in --mode vect"));
        }
    }
    GObject::new(labels, parity)
}

/// Parse and validate a spec document.
pub fn from_value(v: &Value, opts: &Options) -> Result<ExampleData> {
    let root = object(v, "")?;
    match root.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => {}
        Some(other) => return Err(schema_err("/schema", format!("unsupported schema {other:?}, expected {SCHEMA:?}"))),
        None => return Err(schema_err("/schema", format!("missing schema tag {SCHEMA:?}"))),
    }
    let c = opts.conductor;
    let hv = object(field(root, "", "hopf")?, "/hopf")?;
    let v1 = carrier(hv, opts)?;
    let k = GObject::unit();
    let v2 = v1.tensor(&v1);
    let mu = matrix(field(hv, "/hopf", "mu")?, "/hopf/mu", &v2, &v1, c)?;
    let eta = matrix(field(hv, "/hopf", "eta")?, "/hopf/eta", &k, &v1, c)?;
    let delta = matrix(field(hv, "/hopf", "delta")?, "/hopf/delta", &v1, &v2, c)?;
    let eps = matrix(field(hv, "/hopf", "eps")?, "/hopf/eps", &v1, &k, c)?;
    let s = hv.get("antipode").map(|a| matrix(a, "/hopf/antipode", &v1, &v1, c)).transpose()?;
    let hopf = HopfAlgebra::new(v1.clone(), mu, eta, delta, eps, s).map_err(|e| schema_err("/hopf", e.to_string()))?;
    let gamma = matrix(field(root, "", "gamma")?, "/gamma", &k, &v2, c)?;
    let lambda = matrix(field(root, "", "lambda")?, "/lambda", &v1, &k, c)?;
    let sigma = root.get("sigma").map(|s| matrix(s, "/sigma", &k, &v1, c)).transpose()?;
    let beta = root.get("beta").map(|b| number(b, "/beta", c)).transpose()?;
    let name = root.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
    let choices = match root.get("choices") {
        None => vec![],
        Some(a) => array(a, "/choices")?
            .iter()
            .enumerate()
            .map(|(k, x)| x.as_str().map(String::from).ok_or_else(|| schema_err(&format!("/choices/{k}"), "expected a string")))
            .collect::<Result<_>>()?,
    };
    Ok(ExampleData { name, hopf, gamma, lambda, sigma, beta, choices })
}

pub fn from_str(text: &str, opts: &Options) -> Result<ExampleData> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("not JSON: {e}")))?;
    from_value(&v, opts)
}

fn flat(m: &Mor) -> Value {
    Value::Array(m.entries.iter().map(|x| Value::String(x.to_compact())).collect())
}

/// Serialise example data; `conductor` rejects numbers outside `Q(ζ_N)`.
pub fn to_value(d: &ExampleData, conductor: Option<u32>) -> Result<Value> {
    if let Some(n) = conductor {
        let h = &d.hopf;
        let all = [&h.mu, &h.eta, &h.delta, &h.eps, &h.s, &d.gamma, &d.lambda]
            .into_iter()
            .chain(d.sigma.as_ref())
            .flat_map(|m| m.entries.iter())
            .chain(d.beta.as_ref());
        if let Some(x) = all.into_iter().find(|x| !x.lies_in(n)) {
            return Err(Error::FieldTooSmall(format!("{x} is not in Q(ζ_{n})")));
        }
    }
    let h = &d.hopf;
    let mut out = json!({
        "schema": SCHEMA,
        "name": d.name,
        "choices": d.choices,
        "hopf": {
            "basis": h.carrier.basis.as_ref(),
            "parity": h.carrier.parity.as_ref(),
            "mu": flat(&h.mu),
            "eta": flat(&h.eta),
            "delta": flat(&h.delta),
            "eps": flat(&h.eps),
            "antipode": flat(&h.s),
        },
        "gamma": flat(&d.gamma),
        "lambda": flat(&d.lambda),
    });
    if let Some(s) = &d.sigma {
        out["sigma"] = flat(s);
    }
    if let Some(b) = &d.beta {
        out["beta"] = Value::String(b.to_compact());
    }
    Ok(out)
}

/// `σ` (and optionally `β`) from a separate file: either a bare array or an object
/// with `sigma` and `beta` fields.
pub fn sigma_from_str(text: &str, dim: usize, opts: &Options) -> Result<(Vec<CycNum>, Option<CycNum>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("not JSON: {e}")))?;
    match &v {
        Value::Array(_) => Ok((entries(&v, "", dim, opts.conductor)?, None)),
        Value::Object(o) => {
            let s = entries(field(o, "", "sigma")?, "/sigma", dim, opts.conductor)?;
            let b = o.get("beta").map(|b| number(b, "/beta", opts.conductor)).transpose()?;
            Ok((s, b))
        }
        _ => Err(schema_err("", "expected an array or an object with a sigma field")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{build_sf, build_sweedler, SfParams};

    #[test]
    fn roundtrip() {
        let d = build_sf(&SfParams { d: 2, zeta: -1, i_plus: true, beta_principal: true }).unwrap();
        let v = to_value(&d, None).unwrap();
        let back = from_value(&v, &Options::default()).unwrap();
        assert_eq!(back.hopf, d.hopf);
        assert_eq!(back.gamma, d.gamma);
        assert_eq!(back.sigma, d.sigma);
        assert_eq!(back.beta, d.beta);
        assert_eq!(to_value(&back, None).unwrap(), v);
    }

    #[test]
    fn pointers_and_fields() {
        let d = build_sweedler(&CycNum::one()).unwrap();
        let good = to_value(&d, None).unwrap();
        let opts = Options::default();
        let err = |v: &Value| from_value(v, &opts).unwrap_err();

        let mut v = good.clone();
        v["hopf"]["mu"][17] = json!("1/0");
        assert!(matches!(err(&v), Error::Schema { pointer, .. } if pointer == "/hopf/mu/17"));
        let mut v = good.clone();
        v["gamma"] = json!([1, 2]);
        assert!(matches!(err(&v), Error::Schema { pointer, .. } if pointer == "/gamma"));
        let mut v = good.clone();
        v["schema"] = json!("hopfext/0");
        assert!(matches!(err(&v), Error::Schema { pointer, .. } if pointer == "/schema"));
        let mut v = good.clone();
        v["hopf"].as_object_mut().unwrap().remove("delta");
        assert!(matches!(err(&v), Error::Schema { pointer, .. } if pointer == "/hopf"));
        let mut v = good.clone();
        v["hopf"]["parity"][2] = json!(1);
        let svect = Options { mode: Some(Mode::Vect), conductor: None };
        assert!(matches!(from_value(&v, &svect), Err(Error::Schema { pointer, .. }) if pointer == "/hopf/parity/2"));

        let sf = build_sf(&SfParams { d: 2, zeta: -1, i_plus: true, beta_principal: true }).unwrap();
        assert!(matches!(to_value(&sf, Some(4)), Err(Error::FieldTooSmall(_))));
        assert!(to_value(&sf, Some(8)).is_ok());
        let v = to_value(&sf, None).unwrap();
        assert!(matches!(from_value(&v, &Options { mode: None, conductor: Some(4) }), Err(Error::FieldTooSmall(_))));
    }
}
