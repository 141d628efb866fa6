"""Recursive-descent parser for the ``.goals`` DSL.

Grammar (keyword-introduced blocks, braces for nesting, quoted names)::

    model       = actor process strategic*
    actor       = "actor" STRING kind
    process     = "process" STRING
    strategic   = "strategic" STRING "{" analysis+ "}"
    analysis    = "analysis" WORD "{" decision+ "}"
    decision    = "decision" STRING "{" information+ "}"
    information = "information" STRING "{" visualization "}"
    visualization = "visualization" STRING "{" vis_item+ "}"
    vis_item    = "goals" ":" literal ("," literal)*
                | "interactions" ":" literal ("," literal)*
                | source
    source      = "source" STRING "{" src_item* "}"
    src_item    = "category" STRING | "measure" STRING
                | "shape" shape | "type" STRING WORD
    shape       = "Flat" | "Tree" "(" STRING "," STRING ")"
                | "Graph" "(" STRING "," STRING ")"

Enum literals are case-insensitive; ``#`` starts a line comment. Any input
yields either a model satisfying all invariants or a diagnostics list
(wrapped in :class:`GoalDslError`) — the parser never raises anything else.
"""

from __future__ import annotations

import enum

from ..diagnostics import (
    DUPLICATE_ATTRIBUTE,
    EMPTY_MULTIPLICITY,
    MISSING_BUSINESS_PROCESS,
    SYNTAX,
    UNKNOWN_LITERAL,
    Diagnostic,
)
from ..errors import GoalDslError
from . import lexer
from .model import (
    FLAT,
    ActorKind,
    AnalysisKind,
    AnalysisType,
    BusinessProcess,
    DatasourceResource,
    DecisionGoal,
    GoalModel,
    GraphShape,
    InformationGoal,
    Interaction,
    SourceShape,
    StrategicGoal,
    TreeShape,
    VisGoal,
    VisualizationActor,
    VisualizationRequirement,
    match_literal,
    validate_goal_model,
)

_SCALE_LITERALS = {"nominal", "ordinal", "interval", "ratio"}


class _Abort(Exception):
    """Internal: unrecoverable syntax error; diagnostics already recorded."""


class _Parser:
    def __init__(self, tokens: list[lexer.Token]):
        self.tokens = tokens
        self.pos = 0
        self.diags: list[Diagnostic] = []

    # -- token plumbing ------------------------------------------------

    @property
    def cur(self) -> lexer.Token:
        return self.tokens[self.pos]

    def advance(self) -> lexer.Token:
        tok = self.cur
        if tok.kind != lexer.EOF:
            self.pos += 1
        return tok

    def at(self, kind: str, text: str | None = None) -> bool:
        return self.cur.kind == kind and (text is None or self.cur.text == text)

    def at_keyword(self, *words: str) -> bool:
        return self.cur.kind == lexer.WORD and self.cur.text.lower() in words

    def error(self, message: str, tok: lexer.Token | None = None) -> None:
        tok = tok or self.cur
        self.diags.append(
            Diagnostic(code=SYNTAX, message=message, line=tok.line, column=tok.column)
        )

    def abort(self, message: str, tok: lexer.Token | None = None) -> _Abort:
        self.error(message, tok)
        return _Abort()

    def expect(self, kind: str, what: str) -> lexer.Token:
        if self.cur.kind != kind:
            raise self.abort(f"expected {what}, found {self._describe(self.cur)}")
        return self.advance()

    @staticmethod
    def _describe(tok: lexer.Token) -> str:
        if tok.kind == lexer.EOF:
            return "end of input"
        if tok.kind == lexer.STRING:
            return f'string "{tok.text}"'
        return repr(tok.text)

    def diag(self, code: str, message: str, tok: lexer.Token | None = None) -> None:
        tok = tok or self.cur
        self.diags.append(
            Diagnostic(code=code, message=message, line=tok.line, column=tok.column)
        )

    # -- grammar ---------------------------------------------------------

    def parse_model(self) -> GoalModel | None:
        actor: VisualizationActor | None = None
        process: BusinessProcess | None = None
        strategics: list[StrategicGoal] = []
        try:
            while not self.at(lexer.EOF):
                if self.at_keyword("actor"):
                    tok = self.cur
                    parsed = self.parse_actor()
                    if actor is None:
                        actor = parsed
                    else:
                        self.error("duplicate actor declaration", tok)
                elif self.at_keyword("process"):
                    tok = self.cur
                    self.advance()
                    name = self.expect(lexer.STRING, "process name").text
                    if process is None:
                        process = BusinessProcess(name)
                        if not name:
                            self.diag(
                                MISSING_BUSINESS_PROCESS,
                                "business process name is empty",
                                tok,
                            )
                    else:
                        self.error("duplicate process declaration", tok)
                elif self.at_keyword("strategic"):
                    strategics.append(self.parse_strategic())
                else:
                    raise self.abort(
                        f"expected 'actor', 'process' or 'strategic', found {self._describe(self.cur)}"
                    )
        except _Abort:
            return None

        if process is None:
            self.diag(MISSING_BUSINESS_PROCESS, "no business process declared")
        if actor is None:
            self.error("no actor declared")
        if self.diags or actor is None or process is None:
            return None
        return GoalModel(actor=actor, process=process, strategic_goals=tuple(strategics))

    def parse_actor(self) -> VisualizationActor:
        self.advance()
        name = self.expect(lexer.STRING, "actor name").text
        kind = self.parse_literal(ActorKind, "actor kind")
        return VisualizationActor(name=name, kind=kind or ActorKind.LAY)

    def parse_literal(self, enum_cls: type[enum.Enum], what: str):
        tok = self.expect(lexer.WORD, what)
        member = match_literal(enum_cls, tok.text)
        if member is None:
            self.diag(UNKNOWN_LITERAL, f"unknown {what} {tok.text!r}", tok)
        return member

    def parse_strategic(self) -> StrategicGoal:
        self.advance()
        name = self.expect(lexer.STRING, "strategic goal name").text
        open_tok = self.expect("{", "'{'")
        analyses: list[AnalysisType] = []
        while self.at_keyword("analysis"):
            analyses.append(self.parse_analysis())
        self.expect("}", "'analysis' or '}'")
        if not analyses:
            self.diag(EMPTY_MULTIPLICITY, "strategic goal has no analyses", open_tok)
        return StrategicGoal(name=name, analyses=tuple(analyses))

    def parse_analysis(self) -> AnalysisType:
        self.advance()
        kind = self.parse_literal(AnalysisKind, "analysis kind")
        open_tok = self.expect("{", "'{'")
        decisions: list[DecisionGoal] = []
        while self.at_keyword("decision"):
            decisions.append(self.parse_decision())
        self.expect("}", "'decision' or '}'")
        if not decisions:
            self.diag(EMPTY_MULTIPLICITY, "analysis has no decision goals", open_tok)
        return AnalysisType(kind=kind or AnalysisKind.DESCRIPTIVE, decision_goals=tuple(decisions))

    def parse_decision(self) -> DecisionGoal:
        self.advance()
        name = self.expect(lexer.STRING, "decision goal name").text
        open_tok = self.expect("{", "'{'")
        infos: list[InformationGoal] = []
        while self.at_keyword("information"):
            infos.append(self.parse_information())
        self.expect("}", "'information' or '}'")
        if not infos:
            self.diag(EMPTY_MULTIPLICITY, "decision goal has no information goals", open_tok)
        return DecisionGoal(name=name, information_goals=tuple(infos))

    def parse_information(self) -> InformationGoal:
        self.advance()
        name = self.expect(lexer.STRING, "information goal name").text
        open_tok = self.expect("{", "'{'")
        vis: VisualizationRequirement | None = None
        while self.at_keyword("visualization"):
            tok = self.cur
            parsed = self.parse_visualization()
            if vis is None:
                vis = parsed
            else:
                self.error("information goal already has a visualization", tok)
        self.expect("}", "'visualization' or '}'")
        if vis is None:
            self.diag(EMPTY_MULTIPLICITY, "information goal has no visualization", open_tok)
        return InformationGoal(name=name, visualization=vis)

    def parse_visualization(self) -> VisualizationRequirement:
        self.advance()
        name = self.expect(lexer.STRING, "visualization name").text
        open_tok = self.expect("{", "'{'")
        goals: list[VisGoal] = []
        interactions: list[Interaction] = []
        sources: list[DatasourceResource] = []
        saw_goals = saw_interactions = False
        while True:
            if self.at_keyword("goals"):
                tok = self.advance()
                if saw_goals:
                    self.error("duplicate 'goals:' item", tok)
                saw_goals = True
                self.expect(":", "':'")
                goals = self.parse_literal_list(VisGoal, "visualization goal", "goals", tok)
            elif self.at_keyword("interactions"):
                tok = self.advance()
                if saw_interactions:
                    self.error("duplicate 'interactions:' item", tok)
                saw_interactions = True
                self.expect(":", "':'")
                interactions = self.parse_literal_list(
                    Interaction, "interaction", "interactions", tok
                )
            elif self.at_keyword("source"):
                sources.append(self.parse_source())
            else:
                break
        self.expect("}", "'goals:', 'interactions:', 'source' or '}'")
        if not saw_goals:
            self.diag(EMPTY_MULTIPLICITY, "visualization has no goals", open_tok)
        if not saw_interactions:
            self.diag(EMPTY_MULTIPLICITY, "visualization has no interactions", open_tok)
        if not sources:
            self.diag(EMPTY_MULTIPLICITY, "visualization has no sources", open_tok)
        return VisualizationRequirement(
            name=name,
            goals=tuple(goals),
            interactions=tuple(interactions),
            sources=tuple(sources),
        )

    def parse_literal_list(self, enum_cls, what: str, slot: str, at_tok: lexer.Token):
        members: list = []
        while True:
            if self.cur.kind != lexer.WORD:
                break
            member = self.parse_literal(enum_cls, what)
            if member is not None and member not in members:
                members.append(member)
            if self.at(","):
                self.advance()
                continue
            break
        if not members:
            self.diag(EMPTY_MULTIPLICITY, f"empty {slot} list", at_tok)
        return members

    def parse_source(self) -> DatasourceResource:
        self.advance()
        uri = self.expect(lexer.STRING, "source uri").text
        open_tok = self.expect("{", "'{'")
        categories: list[str] = []
        measures: list[str] = []
        shape: SourceShape = FLAT
        saw_shape = False
        overrides: dict[str, str] = {}
        while True:
            if self.at_keyword("category") or self.at_keyword("measure"):
                is_category = self.cur.text.lower() == "category"
                self.advance()
                tok = self.cur
                name = self.expect(lexer.STRING, "attribute name").text
                if name in categories or name in measures:
                    self.diag(DUPLICATE_ATTRIBUTE, f"attribute {name!r} already declared", tok)
                elif is_category:
                    categories.append(name)
                else:
                    measures.append(name)
            elif self.at_keyword("shape"):
                tok = self.advance()
                if saw_shape:
                    self.error("duplicate shape declaration", tok)
                saw_shape = True
                shape = self.parse_shape()
            elif self.at_keyword("type"):
                self.advance()
                tok = self.cur
                name = self.expect(lexer.STRING, "attribute name").text
                lit = self.expect(lexer.WORD, "scale type")
                value = lit.text.lower()
                if value not in _SCALE_LITERALS:
                    self.diag(UNKNOWN_LITERAL, f"unknown scale type {lit.text!r}", lit)
                elif name in overrides:
                    self.diag(DUPLICATE_ATTRIBUTE, f"duplicate type override for {name!r}", tok)
                else:
                    overrides[name] = value
            else:
                break
        self.expect("}", "'category', 'measure', 'shape', 'type' or '}'")
        if not categories and not measures:
            self.diag(EMPTY_MULTIPLICITY, "source selects no categories or measures", open_tok)
        return DatasourceResource(
            uri=uri,
            categories=tuple(categories),
            measures=tuple(measures),
            shape=shape,
            type_overrides=overrides,
        )

    def parse_shape(self) -> SourceShape:
        tok = self.expect(lexer.WORD, "shape kind")
        kind = tok.text.lower()
        if kind == "flat":
            return FLAT
        if kind not in ("tree", "graph"):
            self.diag(UNKNOWN_LITERAL, f"unknown shape {tok.text!r}", tok)
            return FLAT
        self.expect("(", "'('")
        first = self.expect(lexer.STRING, "column name").text
        self.expect(",", "','")
        second = self.expect(lexer.STRING, "column name").text
        self.expect(")", "')'")
        if kind == "tree":
            return TreeShape(parent_column=first, id_column=second)
        return GraphShape(source_column=first, target_column=second)


def parse_goal_model(text: str) -> GoalModel:
    """Parse DSL source into a validated :class:`GoalModel`.

    Raises :class:`GoalDslError` carrying positioned diagnostics when the
    input is malformed or violates a model invariant.
    """
    try:
        tokens = lexer.lex(text)
    except lexer.LexError as err:
        raise GoalDslError(
            [Diagnostic(code=SYNTAX, message=err.message, line=err.line, column=err.column)]
        ) from None
    parser = _Parser(tokens)
    model = parser.parse_model()
    if model is None:
        raise GoalDslError(parser.diags)
    semantic = validate_goal_model(model)
    if semantic:
        raise GoalDslError(semantic)
    return model
