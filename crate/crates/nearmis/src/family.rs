//! Parser for family expressions such as `join(complete(1),empty(4))`.

use nearmis_core::generate::Family;

#[derive(Debug)]
enum Arg {
    Number(String),
    Family(Family),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn token(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '-'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn arg(&mut self) -> Result<Arg, String> {
        let tok = self.token();
        if tok.starts_with(|c: char| c.is_ascii_digit() || c == '.' || c == '-') {
            Ok(Arg::Number(tok.to_string()))
        } else {
            self.family_named(tok).map(Arg::Family)
        }
    }

    fn family_named(&mut self, name: &str) -> Result<Family, String> {
        if name.is_empty() {
            return Err(format!("expected a family name at offset {}", self.pos));
        }
        let mut args = Vec::new();
        if self.eat('(') && !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(format!("expected `,` or `)` at offset {}", self.pos));
                }
            }
        }
        build(name, args)
    }
}

fn int(arg: &Arg) -> Result<usize, String> {
    match arg {
        Arg::Number(s) => s.parse().map_err(|_| format!("expected a non-negative integer, got `{s}`")),
        Arg::Family(_) => Err("expected a number, got a family".into()),
    }
}

fn real(arg: &Arg) -> Result<f64, String> {
    match arg {
        Arg::Number(s) => s.parse().map_err(|_| format!("expected a number, got `{s}`")),
        Arg::Family(_) => Err("expected a number, got a family".into()),
    }
}

fn fam(arg: Arg) -> Result<Box<Family>, String> {
    match arg {
        Arg::Family(f) => Ok(Box::new(f)),
        Arg::Number(s) => Err(format!("expected a family, got `{s}`")),
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<Family, String> {
    let arity = |want: usize| {
        if args.len() == want {
            Ok(())
        } else {
            Err(format!("`{name}` takes {want} argument(s), got {}", args.len()))
        }
    };
    Ok(match name {
        "empty" => {
            arity(1)?;
            Family::Empty(int(&args[0])?)
        }
        "complete" => {
            arity(1)?;
            Family::Complete(int(&args[0])?)
        }
        "cycle" => {
            arity(1)?;
            Family::Cycle(int(&args[0])?)
        }
        "path" => {
            arity(1)?;
            Family::Path(int(&args[0])?)
        }
        "petersen" => {
            arity(0)?;
            Family::Petersen
        }
        "h_np" | "hnp" => {
            arity(2)?;
            Family::Hnp(int(&args[0])?, int(&args[1])?)
        }
        "gnp" => {
            arity(2)?;
            Family::Gnp(int(&args[0])?, real(&args[1])?)
        }
        "join" | "disjoint_union" | "union" => {
            arity(2)?;
            let mut it = args.into_iter();
            let a = fam(it.next().unwrap())?;
            let b = fam(it.next().unwrap())?;
            if name == "join" {
                Family::Join(a, b)
            } else {
                Family::DisjointUnion(a, b)
            }
        }
        other => return Err(format!("unknown family `{other}`")),
    })
}

/// Parses one family expression.
pub fn parse_family(src: &str) -> Result<Family, String> {
    let mut p = Parser { src, pos: 0 };
    let name = p.token();
    let f = p.family_named(name)?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(format!("unexpected input after offset {}", p.pos));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_expressions() {
        assert_eq!(
            parse_family("join(complete(1), empty(4))").unwrap(),
            Family::Join(Box::new(Family::Complete(1)), Box::new(Family::Empty(4)))
        );
        assert_eq!(parse_family("h_np(10,4)").unwrap(), Family::Hnp(10, 4));
        assert_eq!(parse_family("gnp(20,0.25)").unwrap(), Family::Gnp(20, 0.25));
        assert_eq!(parse_family("petersen").unwrap(), Family::Petersen);
    }

    #[test]
    fn malformed_expressions() {
        assert!(parse_family("cycle(5").is_err());
        assert!(parse_family("cycle(5,6)").is_err());
        assert!(parse_family("wheel(5)").is_err());
        assert!(parse_family("join(1,2)").is_err());
        assert!(parse_family("empty(-1)").is_err());
        assert!(parse_family("empty(3) x").is_err());
    }
}
