"""Decision-tree view of a rule set, for human consumption.

Rules become root-to-leaf paths in a fixed four-level hierarchy
(trigger-1 label, trigger-2 label, elapsed-time label, consequence
label). Rules sharing a label prefix share the internal nodes of that
prefix, and each leaf carries its rule's support and confidence. At
every level children are ordered by descending subtree weight with
lexicographic tie-break, so the strongest branches come first and the
layout is reproducible.
"""

from dataclasses import dataclass

LEVELS = ("root", "trigger1", "trigger2", "delta_t", "consequence")


@dataclass(frozen=True)
class TreeNode:
    """One node of the rule tree.

    ``leaf_metrics`` is a (support, confidence) pair on consequence-level
    nodes and None everywhere else. The root carries an empty label.
    """

    level: str
    label: str
    children: tuple = ()
    leaf_metrics: "tuple | None" = None


def build_tree(ruleset):
    """Arrange a rule set as a prefix-merged tree.

    An empty rule set yields a bare root. Otherwise every rule maps to
    exactly one leaf, reachable by following its four labels from the
    root.
    """
    return _subtree(0, "", list(ruleset))


def _subtree(depth, label, rules):
    if depth == len(LEVELS) - 1:
        rule = rules[0]
        return TreeNode(LEVELS[depth], label,
                        leaf_metrics=(rule.support, rule.confidence))
    groups = {}
    for rule in rules:
        groups.setdefault(rule.labels[depth], []).append(rule)
    ordered = sorted(groups, key=lambda lab: (-sum(r.weight for r in groups[lab]), lab))
    children = tuple(_subtree(depth + 1, lab, groups[lab]) for lab in ordered)
    return TreeNode(LEVELS[depth], label, children)


def render_ascii(tree):
    """Render the tree as indented text, one node per line.

    Leaves are suffixed with their metrics to four decimal places, e.g.
    ``Medium Volume [sup=0.3333, conf=1.0000]``.
    """
    lines = []
    _ascii_lines(tree, 0, lines)
    return "\n".join(lines) + "\n"


def _ascii_lines(node, depth, lines):
    if depth == 0:
        text = "(root)"
    elif node.leaf_metrics is not None:
        sup, conf = node.leaf_metrics
        text = f"{node.label} [sup={sup:.4f}, conf={conf:.4f}]"
    else:
        text = node.label
    lines.append("  " * depth + text)
    for child in node.children:
        _ascii_lines(child, depth + 1, lines)


def render_dot(tree):
    """Render the tree as a DOT digraph.

    Node identifiers are the root-to-node label paths (with separator
    escaping, so they stay unique whatever the labels contain), which
    makes the output stable across runs. Leaves show their metrics on a
    second label line.
    """
    node_lines = []
    edge_lines = []
    _dot_walk(tree, "root", node_lines, edge_lines)
    return "\n".join(
        ["digraph rules {", "  node [shape=box];"]
        + node_lines + edge_lines + ["}"]
    ) + "\n"


def _dot_walk(node, path, node_lines, edge_lines):
    if node.level == "root":
        display = _dot_quote("(root)")
    elif node.leaf_metrics is not None:
        # \n inside a DOT label string is a line break when drawn.
        sup, conf = node.leaf_metrics
        display = ('"' + _dot_escape(node.label)
                   + f"\\n[sup={sup:.4f}, conf={conf:.4f}]" + '"')
    else:
        display = _dot_quote(node.label)
    node_lines.append(f"  {_dot_quote(path)} [label={display}];")
    for child in node.children:
        child_path = path + "/" + child.label.replace("\\", "\\\\").replace("/", "\\/")
        edge_lines.append(f"  {_dot_quote(path)} -> {_dot_quote(child_path)};")
        _dot_walk(child, child_path, node_lines, edge_lines)


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _dot_quote(text):
    return '"' + _dot_escape(text) + '"'


def tree_to_structured(tree):
    """Lossless dict form of the tree (levels, labels, leaf metrics)."""
    doc = {
        "level": tree.level,
        "label": tree.label,
        "children": [tree_to_structured(child) for child in tree.children],
    }
    if tree.leaf_metrics is not None:
        doc["support"], doc["confidence"] = tree.leaf_metrics
    return doc


def tree_from_structured(doc):
    """Rebuild a tree from its dict form; inverse of tree_to_structured."""
    children = tuple(tree_from_structured(child) for child in doc.get("children", ()))
    metrics = None
    if "support" in doc:
        metrics = (doc["support"], doc["confidence"])
    return TreeNode(doc["level"], doc["label"], children, metrics)
