//! Linear form of name-labeled trees: `f2(f2(f1))`.

use super::{DerivTree, RuleName};
use crate::syntax::{Cursor, SyntaxError};

fn is_name_char(c: char) -> bool {
    !(c == '(' || c == ')' || c == ',' || c.is_whitespace())
}

/// Parses `tree := NAME | NAME "(" [tree ("," tree)*] ")"`; `f()` is the
/// same as `f`.
pub fn parse_name_tree(text: &str) -> Result<DerivTree<RuleName>, SyntaxError> {
    let mut cur = Cursor::new(text);
    let tree = tree(&mut cur)?;
    cur.finish()?;
    Ok(tree)
}

fn tree(cur: &mut Cursor<'_>) -> Result<DerivTree<RuleName>, SyntaxError> {
    let name = cur.take_while(is_name_char);
    if name.is_empty() {
        return Err(cur.error("expected a rule name"));
    }
    // is_name_char already excludes every forbidden character
    let name = RuleName::new(name).expect("valid by construction");
    let mut children = Vec::new();
    // `f()` is accepted as a leaf.
    if cur.eat("(") && !cur.eat(")") {
        loop {
            children.push(tree(cur)?);
            if cur.eat(")") {
                break;
            }
            cur.expect(",")?;
        }
    }
    Ok(DerivTree::new(name, children))
}

/// Prints the linear form; leaves are bare names.
pub fn print_name_tree(tree: &DerivTree<RuleName>) -> String {
    tree.to_string()
}
