//! JSON form of a polynomial:
//! `{"vars":["x","y"],"terms":[{"exp":[k,j],"coef":"p/q"},...]}`.

use serde_json::{json, Value};

use super::{Monomial, Poly, PolyError, Rational, Var};

impl Poly {
    /// Serialize against the variables actually present, in name order.
    pub fn to_json(&self) -> Value {
        let vars: Vec<Var> = self.vars().into_iter().collect();
        self.to_json_with_vars(&vars)
    }

    /// Serialize against a declared variable order. Variables of `self`
    /// missing from `vars` are appended in name order.
    pub fn to_json_with_vars(&self, vars: &[Var]) -> Value {
        let mut all: Vec<Var> = vars.to_vec();
        for v in self.vars() {
            if !all.contains(&v) {
                all.push(v);
            }
        }
        let terms: Vec<Value> = self
            .ordered_terms(&all)
            .into_iter()
            .map(|(exp, _, c)| json!({ "exp": exp, "coef": c.to_string() }))
            .collect();
        let names: Vec<&str> = all.iter().map(Var::name).collect();
        json!({ "vars": names, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Poly, PolyError> {
        let bad = |msg: &str| PolyError::Json(msg.to_string());
        let vars: Vec<Var> = value
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `vars` array"))?
            .iter()
            .map(|v| v.as_str().map(Var::new).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<_, _>>()?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = Poly::zero();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without `exp`"))?;
            if exp.len() != vars.len() {
                return Err(bad("exponent vector length differs from `vars`"));
            }
            let pairs = exp
                .iter()
                .zip(&vars)
                .map(|(e, v)| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .map(|e| (v.clone(), e))
                        .ok_or_else(|| bad("exponents must be small nonnegative integers"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let coef: Rational = t
                .get("coef")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without string `coef`"))?
                .parse()
                .map_err(|_| bad("coefficient is not `p` or `p/q`"))?;
            out.add_term(Monomial::from_pairs(pairs), coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_is_exact() {
        let p = Poly::parse("3 + 2x*y - 1/2 y^2").unwrap();
        let v = p.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"vars":["x","y"],"terms":[{"exp":[0,0],"coef":"3"},{"exp":[0,2],"coef":"-1/2"},{"exp":[1,1],"coef":"2"}]}"#
        );
        assert_eq!(Poly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn declared_order_is_respected() {
        let p = Poly::parse("e*a^2 - 4e*b").unwrap();
        let v = p.to_json_with_vars(&[Var::new("e"), Var::new("a"), Var::new("b")]);
        assert_eq!(v["vars"], json!(["e", "a", "b"]));
        assert_eq!(v["terms"][0]["exp"], json!([1, 0, 1]));
        assert_eq!(Poly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Poly::from_json(&json!({"vars": ["x"], "terms": [{"exp": [1, 2], "coef": "1"}]})).is_err());
        assert!(Poly::from_json(&json!({"vars": ["x"], "terms": [{"exp": [1], "coef": "a"}]})).is_err());
        assert!(Poly::from_json(&json!({"terms": []})).is_err());
    }
}
