/// Accumulated command output, rendered either for humans or as
/// `key=value` lines.
#[derive(Debug, Default)]
pub struct Report {
    human: Vec<String>,
    porcelain: Vec<(String, String)>,
}

impl Report {
    pub fn line<'a, K, I>(&mut self, text: String, pairs: I)
    where
        K: AsRef<str> + 'a,
        I: IntoIterator<Item = (K, String)>,
    {
        self.human.push(text);
        for (k, v) in pairs {
            self.porcelain.push((k.as_ref().to_string(), v));
        }
    }

    pub fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        if porcelain {
            for (k, v) in &self.porcelain {
                out.push_str(k);
                out.push('=');
                out.push_str(v);
                out.push('\n');
            }
        } else {
            for l in &self.human {
                out.push_str(l);
                out.push('\n');
            }
        }
        out
    }
}
