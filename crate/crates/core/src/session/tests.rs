use super::*;
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use serde_json::Value;

const DECOMPOSITION_SCRIPT: &str = "
vars a b c d e f;
poset P { a < d < f; c < f; b < e; c < e }
ideal I = Q[P](d*e*f);
cmd primary I;
cmd assprimes I;
";

fn run(text: &str) -> Execution {
    execute(&parse_session(text).unwrap(), &Config::default())
}

#[test]
fn primary_decomposition_script() {
    let s = parse_session(DECOMPOSITION_SCRIPT).unwrap();
    assert_eq!(s.vars.len(), 6);
    assert_eq!(s.posets["P"].covers().len(), 5);
    let out = render(&execute(&s, &Config::default()), Format::Text);
    assert_eq!(
        out,
        "> primary I\n(a,d) ∩ (b,c,e) ∩ (a,c,d,f)^2 ∩ (a,b,c,d,e,f)^3\n\
         > assprimes I\n{(a,d), (b,c,e), (a,c,d,f), (a,b,c,d,e,f)}\n"
    );
}

#[test]
fn parse_errors_have_locations() {
    let e = parse_session("vars a b;\nposet P { b < a }").unwrap_err();
    assert_eq!(e.location, Location { line: 2, column: 11 });
    assert!(matches!(e.kind, ParseErrorKind::Invalid(Error::NaturalLabeling { .. })));

    let e = parse_session("vars a b;\ncmd close J;").unwrap_err();
    assert_eq!(e.location, Location { line: 2, column: 11 });
    assert_eq!(e.kind, ParseErrorKind::Undeclared { what: "ideal", name: "J".into() });

    let e = parse_session("vars a b;\nideal I = (a*q);").unwrap_err();
    assert!(matches!(e.kind, ParseErrorKind::Undeclared { what: "variable", .. }));

    let e = parse_session("vars a b; ideal I = (a); ideal I = (b);").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Duplicate("I".into()));

    assert!(parse_session("vars a; cmd frobnicate;").is_err());
    assert!(parse_session("ideal I = (a);").is_err());
}

#[test]
fn empty_session() {
    let s = parse_session("").unwrap();
    assert!(s.statements.is_empty());
    let e = execute(&s, &Config::default());
    assert_eq!(render(&e, Format::Text), "[]\n");
    let v: Value = serde_json::from_str(&render(&e, Format::Json)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"], serde_json::json!([]));
}

#[test]
fn flagship_y_resolution() {
    let e = run("vars x y z; poset Y = y; ideal I = Q(y*z);
                 cmd resolve y I; cmd verify last exactness 6; cmd betti last;");
    assert!(e.error.is_none(), "{:?}", e.error);
    let v: Value = serde_json::from_str(&render(&e, Format::Json)).unwrap();
    assert_eq!(v["results"][0]["ranks"], serde_json::json!([4, 4, 1]));
    assert_eq!(v["results"][2]["betti"], serde_json::json!({"0": {"2": 4}, "1": {"3": 4}, "2": {"4": 1}}));
    assert_eq!(v["results"][1]["ok"], true);
}

#[test]
fn monomial_syntaxes_agree() {
    let vars = Variables::new(["a", "b", "x1", "x12"]).unwrap();
    assert_eq!(parse_monomial(&vars, "a2b").unwrap(), parse_monomial(&vars, "a^2*b").unwrap());
    assert_eq!(parse_monomial(&vars, "ab^3").unwrap(), Monomial::new(vec![1, 3, 0, 0]));
    assert_eq!(parse_monomial(&vars, "x12x1").unwrap(), Monomial::new(vec![0, 0, 1, 1]));
    assert_eq!(parse_monomial(&vars, "1").unwrap(), Monomial::one(4));
}

#[test]
fn render_parse_round_trip() {
    let vars = Variables::standard(4);
    let gens = parse_generators(&vars, "(a2, a*b*c, d^3, b*d)").unwrap();
    let i = MonomialIdeal::new(4, gens);
    let again = MonomialIdeal::new(4, parse_generators(&vars, &i.display(&vars).to_string()).unwrap());
    assert_eq!(i, again);

    let p = parse_poset(&vars, "{ a < b < d; a < c }").unwrap();
    let q = parse_poset(&vars, &p.display(&vars).to_string()).unwrap();
    assert_eq!(p, q);
}

#[test]
fn commands_cover_the_modules() {
    let text = "
        vars a b c;
        poset V { a < b; a < c }
        ideal I = Q[V](b*c);
        ideal J = (a^2, a*b, a*c, b*c);
        ideal K = I & (a, b);
        cmd close I;
        cmd isqborel J V;
        cmd maxposet J;
        cmd qgens J V;
        cmd factor I;
        cmd pdim I;
        cmd codim I;
        cmd cm I;
        cmd colon I;
        cmd colon J I;
        cmd irreducible I;
        cmd resolve truncated I d=2 cancel;
        cmd verify last band;
        cmd resolve taylor K;
        cmd verify last exactness;
        cmd betti K;
    ";
    let e = run(text);
    assert!(e.error.is_none(), "{:?}", e.error);
    let out = render(&e, Format::Text);
    assert!(out.contains("> close I\n(a^2, a*b, a*c, b*c)\n"), "{out}");
    assert!(out.contains("> isqborel J V\ntrue\n"));
    assert!(out.contains("> qgens J V\nQ(b*c)\n"));
    assert!(out.contains("> factor I\n(a,b)(a,c)\n"), "{out}");
    assert!(out.contains("> colon J I\n(1)\n"), "{out}");
    assert!(out.contains("> verify last band\nok:"));
    assert_eq!(render(&e, Format::Json), render(&run(text), Format::Json));
}

#[test]
fn failures_carry_the_command_index() {
    let e = run("vars a b; ideal I = (b); cmd close I; cmd resolve ek I;");
    let err = e.error.unwrap();
    assert_eq!(err.index, 1);
    assert_eq!(err.command, "resolve ek I");
    assert_eq!(err.error, Error::NotBorel);
    assert_eq!(e.outputs.len(), 1);

    let e = run("vars a b; cmd verify last d2;");
    assert!(matches!(e.error.unwrap().error, Error::HypothesesViolated(_)));
}
