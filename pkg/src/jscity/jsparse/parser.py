"""Recursive-descent ECMAScript parser producing ESTree-shaped dict trees.

Covers the language constructs found in everyday ES2020 code: modules,
classes (including fields and static blocks), generators and async
functions, destructuring, template literals, optional chaining, and
regular-expression literals. Node dictionaries follow the ESTree
interchange shape (``type`` plus ``loc`` with 1-based lines and 0-based
columns), which is also what the pre-parsed JSON ingestion path accepts.

Deliberately out of scope (reported as parse errors): JSX, TypeScript
syntax, decorators, and `with`-era oddities like HTML comments.
"""

from __future__ import annotations

from .tokens import Lexer, Token, TokenizeError, number_value, unescape_string

__all__ = ["ParseError", "parse_source"]

# Words never usable as plain identifiers or binding names.
_RESERVED = frozenset(
    """break case catch class const continue debugger default delete do else
    enum export extends finally for function if import in instanceof new
    return super switch throw try typeof var void while with""".split()
)

_LITERAL_NAMES = frozenset({"true", "false", "null", "this", "super"})

_ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "**=", "<<=", ">>=", ">>>=",
     "&=", "|=", "^=", "&&=", "||=", "??="}
)

_BINARY_PRECEDENCE = {
    "??": 1, "||": 2, "&&": 3, "|": 4, "^": 5, "&": 6,
    "==": 7, "!=": 7, "===": 7, "!==": 7,
    "<": 8, ">": 8, "<=": 8, ">=": 8, "in": 8, "instanceof": 8,
    "<<": 9, ">>": 9, ">>>": 9,
    "+": 10, "-": 10,
    "*": 11, "/": 11, "%": 11,
    "**": 12,
}

_LOGICAL_OPS = frozenset({"&&", "||", "??"})

_UNARY_OPS = frozenset({"delete", "void", "typeof", "+", "-", "~", "!"})


class ParseError(Exception):
    """Syntax error with a 1-based line and 0-based column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} ({line}:{column})")
        self.message = message
        self.line = line
        self.column = column


def parse_source(text: str) -> dict:
    """Parse ``text`` and return an ESTree Program dict.

    Raises ParseError on any lexical or syntactic error.
    """
    try:
        return _Parser(text).parse_program()
    except TokenizeError as exc:
        raise ParseError(exc.message, exc.line, exc.column) from None


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.lexer = Lexer(text)
        self.prev_end = (1, 0)
        self.tok: Token = self.lexer.next_token()
        # (is_async, is_generator) per enclosing function; module level
        # permits top-level await.
        self.fn_stack: list[tuple[bool, bool]] = [(True, False)]

    # ------------------------------------------------------------------
    # token plumbing
    # ------------------------------------------------------------------

    def _advance(self) -> Token:
        tok = self.tok
        self.prev_end = (tok.end_line, tok.end_col)
        self.tok = self.lexer.next_token()
        return tok

    def _save(self):
        return (self.lexer.save(), self.tok, self.prev_end)

    def _restore(self, state) -> None:
        lex_state, self.tok, self.prev_end = state
        self.lexer.restore(lex_state)

    def at(self, value: str) -> bool:
        return self.tok.kind == "punct" and self.tok.value == value

    def at_name(self, value: str) -> bool:
        return self.tok.kind == "name" and self.tok.value == value

    def eat(self, value: str) -> bool:
        if self.at(value):
            self._advance()
            return True
        return False

    def eat_name(self, value: str) -> bool:
        if self.at_name(value):
            self._advance()
            return True
        return False

    def expect(self, value: str) -> Token:
        if not self.at(value):
            raise self._error(f"expected {value!r}")
        return self._advance()

    def _error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        shown = tok.value if tok.kind != "eof" else "end of input"
        return ParseError(f"{message} but found {shown!r}", tok.line, tok.col)

    def _start(self) -> tuple[int, int]:
        return (self.tok.line, self.tok.col)

    def _node(self, type_: str, start: tuple[int, int], **fields) -> dict:
        node = {"type": type_}
        node.update(fields)
        node["loc"] = {
            "start": {"line": start[0], "column": start[1]},
            "end": {"line": self.prev_end[0], "column": self.prev_end[1]},
        }
        return node

    def _semicolon(self) -> None:
        if self.eat(";"):
            return
        if self.at("}") or self.tok.kind == "eof" or self.tok.nl_before:
            return  # automatic semicolon insertion
        raise self._error("expected ';'")

    # ------------------------------------------------------------------
    # program & statements
    # ------------------------------------------------------------------

    def parse_program(self) -> dict:
        body = []
        while self.tok.kind != "eof":
            body.append(self.parse_statement(top_level=True))
        text = self.text
        nl = text.rfind("\n")
        end_line = text.count("\n") + 1
        end_col = len(text) - (nl + 1) if nl >= 0 else len(text)
        return {
            "type": "Program",
            "body": body,
            "sourceType": "module",
            "loc": {
                "start": {"line": 1, "column": 0},
                "end": {"line": end_line, "column": end_col},
            },
        }

    def parse_statement(self, top_level: bool = False) -> dict:
        tok = self.tok
        if tok.kind == "punct":
            if tok.value == "{":
                return self.parse_block()
            if tok.value == ";":
                start = self._start()
                self._advance()
                return self._node("EmptyStatement", start)
        if tok.kind == "name":
            word = tok.value
            if word in ("var", "const"):
                return self.parse_variable_statement()
            if word == "let" and self._let_starts_declaration():
                return self.parse_variable_statement()
            if word == "function":
                return self.parse_function(is_declaration=True)
            if word == "async" and self._async_function_ahead():
                return self.parse_function(is_declaration=True)
            if word == "class":
                return self.parse_class(is_declaration=True)
            if word == "if":
                return self.parse_if()
            if word == "for":
                return self.parse_for()
            if word == "while":
                return self.parse_while()
            if word == "do":
                return self.parse_do_while()
            if word == "switch":
                return self.parse_switch()
            if word == "try":
                return self.parse_try()
            if word == "return":
                return self.parse_return()
            if word == "throw":
                return self.parse_throw()
            if word in ("break", "continue"):
                return self.parse_break_continue(word)
            if word == "debugger":
                start = self._start()
                self._advance()
                self._semicolon()
                return self._node("DebuggerStatement", start)
            if word == "with":
                return self.parse_with()
            if word == "import" and top_level and not self._import_is_expression():
                return self.parse_import()
            if word == "export" and top_level:
                return self.parse_export()
            if word not in _RESERVED and self._label_ahead():
                return self.parse_labeled()
        start = self._start()
        expr = self.parse_expression()
        self._semicolon()
        return self._node("ExpressionStatement", start, expression=expr)

    def _let_starts_declaration(self) -> bool:
        state = self._save()
        self._advance()
        nxt = self.tok
        self._restore(state)
        if nxt.kind == "name" and nxt.value not in _RESERVED:
            return True
        return nxt.kind == "punct" and nxt.value in ("[", "{")

    def _async_function_ahead(self) -> bool:
        state = self._save()
        self._advance()
        ok = self.at_name("function") and not self.tok.nl_before
        self._restore(state)
        return ok

    def _import_is_expression(self) -> bool:
        state = self._save()
        self._advance()
        ok = self.at("(") or self.at(".")
        self._restore(state)
        return ok

    def _label_ahead(self) -> bool:
        state = self._save()
        self._advance()
        ok = self.at(":")
        self._restore(state)
        return ok

    def parse_block(self) -> dict:
        start = self._start()
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                raise self._error("expected '}'")
            body.append(self.parse_statement())
        self.expect("}")
        return self._node("BlockStatement", start, body=body)

    def parse_variable_statement(self) -> dict:
        node = self.parse_variable_declaration()
        self._semicolon()
        node["loc"]["end"] = {"line": self.prev_end[0], "column": self.prev_end[1]}
        return node

    def parse_variable_declaration(self, no_in: bool = False) -> dict:
        start = self._start()
        kind = self._advance().value
        declarations = [self.parse_declarator(no_in)]
        while self.eat(","):
            declarations.append(self.parse_declarator(no_in))
        return self._node("VariableDeclaration", start,
                          declarations=declarations, kind=kind)

    def parse_declarator(self, no_in: bool = False) -> dict:
        start = self._start()
        target = self.parse_binding_target()
        init = None
        if self.eat("="):
            init = self.parse_assign(no_in=no_in)
        return self._node("VariableDeclarator", start, id=target, init=init)

    def parse_if(self) -> dict:
        start = self._start()
        self._advance()
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        consequent = self.parse_statement()
        alternate = None
        if self.eat_name("else"):
            alternate = self.parse_statement()
        return self._node("IfStatement", start, test=test,
                          consequent=consequent, alternate=alternate)

    def parse_for(self) -> dict:
        start = self._start()
        self._advance()
        is_await = self.eat_name("await")
        self.expect("(")
        init = None
        if self.at(";"):
            pass
        elif self.tok.kind == "name" and (
                self.tok.value in ("var", "const")
                or (self.tok.value == "let" and self._let_starts_declaration())):
            init = self.parse_variable_declaration(no_in=True)
            if (self.at_name("in") or self.at_name("of")) and len(init["declarations"]) == 1:
                return self._finish_for_in_of(start, init, is_await)
        else:
            init = self.parse_expression(no_in=True)
            if self.at_name("in") or self.at_name("of"):
                left = _to_pattern(init, self)
                return self._finish_for_in_of(start, left, is_await)
        self.expect(";")
        test = None if self.at(";") else self.parse_expression()
        self.expect(";")
        update = None if self.at(")") else self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return self._node("ForStatement", start, init=init, test=test,
                          update=update, body=body)

    def _finish_for_in_of(self, start, left, is_await: bool) -> dict:
        of = self.at_name("of")
        self._advance()
        right = self.parse_assign() if of else self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        if of:
            return self._node("ForOfStatement", start, left=left, right=right,
                              body=body, **{"await": is_await})
        return self._node("ForInStatement", start, left=left, right=right,
                          body=body)

    def parse_while(self) -> dict:
        start = self._start()
        self._advance()
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return self._node("WhileStatement", start, test=test, body=body)

    def parse_do_while(self) -> dict:
        start = self._start()
        self._advance()
        body = self.parse_statement()
        if not self.eat_name("while"):
            raise self._error("expected 'while'")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        self.eat(";")
        return self._node("DoWhileStatement", start, body=body, test=test)

    def parse_switch(self) -> dict:
        start = self._start()
        self._advance()
        self.expect("(")
        discriminant = self.parse_expression()
        self.expect(")")
        self.expect("{")
        cases = []
        while not self.at("}"):
            case_start = self._start()
            if self.eat_name("case"):
                test = self.parse_expression()
            elif self.eat_name("default"):
                test = None
            else:
                raise self._error("expected 'case' or 'default'")
            self.expect(":")
            consequent = []
            while not (self.at("}") or self.at_name("case")
                       or self.at_name("default")):
                consequent.append(self.parse_statement())
            cases.append(self._node("SwitchCase", case_start, test=test,
                                    consequent=consequent))
        self.expect("}")
        return self._node("SwitchStatement", start,
                          discriminant=discriminant, cases=cases)

    def parse_try(self) -> dict:
        start = self._start()
        self._advance()
        block = self.parse_block()
        handler = None
        finalizer = None
        if self.at_name("catch"):
            handler_start = self._start()
            self._advance()
            param = None
            if self.eat("("):
                param = self.parse_binding_target()
                self.expect(")")
            body = self.parse_block()
            handler = self._node("CatchClause", handler_start, param=param,
                                 body=body)
        if self.eat_name("finally"):
            finalizer = self.parse_block()
        if handler is None and finalizer is None:
            raise self._error("expected 'catch' or 'finally'")
        return self._node("TryStatement", start, block=block, handler=handler,
                          finalizer=finalizer)

    def parse_return(self) -> dict:
        start = self._start()
        self._advance()
        argument = None
        if not (self.at(";") or self.at("}") or self.tok.kind == "eof"
                or self.tok.nl_before):
            argument = self.parse_expression()
        self._semicolon()
        return self._node("ReturnStatement", start, argument=argument)

    def parse_throw(self) -> dict:
        start = self._start()
        self._advance()
        if self.tok.nl_before:
            raise self._error("newline not allowed after 'throw'")
        argument = self.parse_expression()
        self._semicolon()
        return self._node("ThrowStatement", start, argument=argument)

    def parse_break_continue(self, word: str) -> dict:
        start = self._start()
        self._advance()
        label = None
        if (self.tok.kind == "name" and not self.tok.nl_before
                and self.tok.value not in _RESERVED):
            label = self.parse_identifier()
        self._semicolon()
        type_ = "BreakStatement" if word == "break" else "ContinueStatement"
        return self._node(type_, start, label=label)

    def parse_labeled(self) -> dict:
        start = self._start()
        label = self.parse_identifier()
        self.expect(":")
        body = self.parse_statement()
        return self._node("LabeledStatement", start, label=label, body=body)

    def parse_with(self) -> dict:
        start = self._start()
        self._advance()
        self.expect("(")
        obj = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return self._node("WithStatement", start, object=obj, body=body)

    # ------------------------------------------------------------------
    # modules
    # ------------------------------------------------------------------

    def parse_import(self) -> dict:
        start = self._start()
        self._advance()
        specifiers = []
        if self.tok.kind == "str":
            source = self.parse_literal()
            self._semicolon()
            return self._node("ImportDeclaration", start,
                              specifiers=specifiers, source=source)
        if self.tok.kind == "name" and self.tok.value not in _RESERVED:
            spec_start = self._start()
            local = self.parse_identifier()
            specifiers.append(self._node("ImportDefaultSpecifier", spec_start,
                                         local=local))
            if self.eat(","):
                self._parse_import_tail(specifiers)
        else:
            self._parse_import_tail(specifiers)
        if not self.eat_name("from"):
            raise self._error("expected 'from'")
        if self.tok.kind != "str":
            raise self._error("expected module string")
        source = self.parse_literal()
        self._semicolon()
        return self._node("ImportDeclaration", start, specifiers=specifiers,
                          source=source)

    def _parse_import_tail(self, specifiers: list) -> None:
        if self.at("*"):
            spec_start = self._start()
            self._advance()
            if not self.eat_name("as"):
                raise self._error("expected 'as'")
            local = self.parse_identifier()
            specifiers.append(self._node("ImportNamespaceSpecifier",
                                         spec_start, local=local))
            return
        self.expect("{")
        while not self.at("}"):
            spec_start = self._start()
            imported = self.parse_module_export_name()
            local = imported
            if self.eat_name("as"):
                local = self.parse_identifier()
            specifiers.append(self._node("ImportSpecifier", spec_start,
                                         imported=imported, local=local))
            if not self.eat(","):
                break
        self.expect("}")

    def parse_module_export_name(self) -> dict:
        if self.tok.kind == "str":
            return self.parse_literal()
        start = self._start()
        name = self._advance().value
        return self._node("Identifier", start, name=name)

    def parse_export(self) -> dict:
        start = self._start()
        self._advance()
        if self.at("*"):
            self._advance()
            exported = None
            if self.eat_name("as"):
                exported = self.parse_module_export_name()
            if not self.eat_name("from"):
                raise self._error("expected 'from'")
            source = self.parse_literal()
            self._semicolon()
            return self._node("ExportAllDeclaration", start,
                              exported=exported, source=source)
        if self.eat_name("default"):
            if self.at_name("function") or (self.at_name("async")
                                            and self._async_function_ahead()):
                declaration = self.parse_function(is_declaration=True,
                                                  optional_id=True)
            elif self.at_name("class"):
                declaration = self.parse_class(is_declaration=True,
                                               optional_id=True)
            else:
                declaration = self.parse_assign()
                self._semicolon()
            return self._node("ExportDefaultDeclaration", start,
                              declaration=declaration)
        if self.at("{"):
            specifiers = []
            self.expect("{")
            while not self.at("}"):
                spec_start = self._start()
                local = self.parse_module_export_name()
                exported = local
                if self.eat_name("as"):
                    exported = self.parse_module_export_name()
                specifiers.append(self._node("ExportSpecifier", spec_start,
                                             local=local, exported=exported))
                if not self.eat(","):
                    break
            self.expect("}")
            source = None
            if self.eat_name("from"):
                source = self.parse_literal()
            self._semicolon()
            return self._node("ExportNamedDeclaration", start,
                              declaration=None, specifiers=specifiers,
                              source=source)
        declaration = self.parse_statement()
        return self._node("ExportNamedDeclaration", start,
                          declaration=declaration, specifiers=[], source=None)

    # ------------------------------------------------------------------
    # functions & classes
    # ------------------------------------------------------------------

    def parse_function(self, is_declaration: bool,
                       optional_id: bool = False) -> dict:
        start = self._start()
        is_async = self.eat_name("async")
        if not self.eat_name("function"):
            raise self._error("expected 'function'")
        is_generator = self.eat("*")
        fn_id = None
        if self.tok.kind == "name" and self.tok.value not in _RESERVED:
            fn_id = self.parse_identifier()
        elif is_declaration and not optional_id:
            raise self._error("expected function name")
        params = self.parse_params()
        body = self._parse_function_body(is_async, is_generator)
        type_ = "FunctionDeclaration" if is_declaration else "FunctionExpression"
        return self._node(type_, start, id=fn_id, params=params, body=body,
                          generator=is_generator, **{"async": is_async})

    def parse_params(self) -> list:
        self.expect("(")
        params = []
        while not self.at(")"):
            if self.at("..."):
                rest_start = self._start()
                self._advance()
                argument = self.parse_binding_target()
                params.append(self._node("RestElement", rest_start,
                                         argument=argument))
            else:
                params.append(self._parse_maybe_default_pattern())
            if not self.eat(","):
                break
        self.expect(")")
        return params

    def _parse_maybe_default_pattern(self) -> dict:
        start = self._start()
        target = self.parse_binding_target()
        if self.eat("="):
            default = self.parse_assign()
            return self._node("AssignmentPattern", start, left=target,
                              right=default)
        return target

    def _parse_function_body(self, is_async: bool, is_generator: bool) -> dict:
        self.fn_stack.append((is_async, is_generator))
        try:
            return self.parse_block()
        finally:
            self.fn_stack.pop()

    def parse_binding_target(self) -> dict:
        if self.at("["):
            return self.parse_array_pattern()
        if self.at("{"):
            return self.parse_object_pattern()
        if self.tok.kind == "name" and self.tok.value not in _RESERVED \
                and self.tok.value not in _LITERAL_NAMES:
            return self.parse_identifier()
        raise self._error("expected binding target")

    def parse_array_pattern(self) -> dict:
        start = self._start()
        self.expect("[")
        elements = []
        while not self.at("]"):
            if self.at(","):
                elements.append(None)
                self._advance()
                continue
            if self.at("..."):
                rest_start = self._start()
                self._advance()
                argument = self.parse_binding_target()
                elements.append(self._node("RestElement", rest_start,
                                           argument=argument))
            else:
                elements.append(self._parse_maybe_default_pattern())
            if not self.eat(","):
                break
        self.expect("]")
        return self._node("ArrayPattern", start, elements=elements)

    def parse_object_pattern(self) -> dict:
        start = self._start()
        self.expect("{")
        properties = []
        while not self.at("}"):
            if self.at("..."):
                rest_start = self._start()
                self._advance()
                argument = self.parse_binding_target()
                properties.append(self._node("RestElement", rest_start,
                                             argument=argument))
            else:
                prop_start = self._start()
                computed = False
                if self.at("["):
                    self._advance()
                    key = self.parse_assign()
                    self.expect("]")
                    computed = True
                elif self.tok.kind in ("str", "num"):
                    key = self.parse_literal()
                else:
                    key_start = self._start()
                    key = self._node("Identifier", key_start,
                                     name=self._advance().value)
                shorthand = False
                if self.eat(":"):
                    value = self._parse_maybe_default_pattern()
                else:
                    shorthand = True
                    value = key
                    if self.eat("="):
                        value = self._node("AssignmentPattern", prop_start,
                                           left=key,
                                           right=self.parse_assign())
                properties.append(self._node(
                    "Property", prop_start, key=key, value=value,
                    kind="init", method=False, shorthand=shorthand,
                    computed=computed))
            if not self.eat(","):
                break
        self.expect("}")
        return self._node("ObjectPattern", start, properties=properties)

    def parse_class(self, is_declaration: bool,
                    optional_id: bool = False) -> dict:
        start = self._start()
        self._advance()
        class_id = None
        if self.tok.kind == "name" and self.tok.value not in _RESERVED \
                and self.tok.value != "extends":
            class_id = self.parse_identifier()
        elif is_declaration and not optional_id:
            raise self._error("expected class name")
        super_class = None
        if self.eat_name("extends"):
            super_class = self.parse_unary_chain()
        body = self.parse_class_body()
        type_ = "ClassDeclaration" if is_declaration else "ClassExpression"
        return self._node(type_, start, id=class_id, superClass=super_class,
                          body=body)

    def parse_class_body(self) -> dict:
        start = self._start()
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.eat(";"):
                continue
            body.append(self.parse_class_element())
        self.expect("}")
        return self._node("ClassBody", start, body=body)

    def parse_class_element(self) -> dict:
        start = self._start()
        is_static = False
        if self.at_name("static") and not self._name_is_key_ahead():
            self._advance()
            is_static = True
            if self.at("{"):
                block = self.parse_block()
                return self._node("StaticBlock", start, body=block["body"])
        return self._parse_method_or_field(start, is_static)

    def _name_is_key_ahead(self) -> bool:
        """True when the current contextual keyword is itself a key
        (e.g. ``static() {}`` or ``get = 1``)."""
        state = self._save()
        self._advance()
        ok = self.at("(") or self.at("=") or self.at(";") or self.at("}")
        self._restore(state)
        return ok

    def _parse_method_or_field(self, start, is_static: bool) -> dict:
        is_async = False
        is_generator = False
        kind = "method"
        if self.at_name("async") and not self._name_is_key_ahead():
            self._advance()
            is_async = True
        if self.at("*"):
            self._advance()
            is_generator = True
        if not is_async and not is_generator and \
                (self.at_name("get") or self.at_name("set")) \
                and not self._name_is_key_ahead():
            kind = self._advance().value
        key, computed = self.parse_property_key()
        if self.at("("):
            value = self.parse_method_value(is_async, is_generator)
            if kind == "method" and not is_static and not computed and (
                    (key["type"] == "Identifier" and key["name"] == "constructor")
                    or (key["type"] == "Literal" and key.get("value") == "constructor")):
                kind = "constructor"
            return self._node("MethodDefinition", start, key=key, value=value,
                              kind=kind, static=is_static, computed=computed)
        # field
        value = None
        if self.eat("="):
            value = self.parse_assign()
        self._semicolon()
        return self._node("PropertyDefinition", start, key=key, value=value,
                          static=is_static, computed=computed)

    def parse_property_key(self) -> tuple[dict, bool]:
        if self.at("["):
            self._advance()
            key = self.parse_assign()
            self.expect("]")
            return key, True
        if self.tok.kind in ("str", "num"):
            return self.parse_literal(), False
        if self.tok.kind == "privatename":
            start = self._start()
            name = self._advance().value
            return self._node("PrivateIdentifier", start, name=name[1:]), False
        if self.tok.kind == "name":
            start = self._start()
            return self._node("Identifier", start,
                              name=self._advance().value), False
        raise self._error("expected property key")

    def parse_method_value(self, is_async: bool, is_generator: bool) -> dict:
        start = self._start()
        params = self.parse_params()
        body = self._parse_function_body(is_async, is_generator)
        return self._node("FunctionExpression", start, id=None, params=params,
                          body=body, generator=is_generator,
                          **{"async": is_async})

    # ------------------------------------------------------------------
    # expressions
    # ------------------------------------------------------------------

    def parse_expression(self, no_in: bool = False) -> dict:
        start = self._start()
        expr = self.parse_assign(no_in=no_in)
        if not self.at(","):
            return expr
        expressions = [expr]
        while self.eat(","):
            expressions.append(self.parse_assign(no_in=no_in))
        return self._node("SequenceExpression", start, expressions=expressions)

    def parse_assign(self, no_in: bool = False) -> dict:
        start = self._start()
        arrow = self._try_arrow_ahead()
        if arrow is not None:
            return arrow
        if self.at_name("yield") and self.fn_stack[-1][1]:
            return self.parse_yield(start)
        left = self.parse_conditional(no_in)
        if left["type"] == "Identifier" and self.at("=>") \
                and not self.tok.nl_before:
            return self._finish_arrow(start, [left], is_async=False)
        if self.tok.kind == "regex" and self.tok.value.startswith("/="):
            self.tok = self.lexer.relex_divide(self.tok)
        if self.tok.kind == "punct" and self.tok.value in _ASSIGN_OPS:
            op = self._advance().value
            if op == "=":
                left = _to_pattern(left, self)
            right = self.parse_assign(no_in=no_in)
            return self._node("AssignmentExpression", start, operator=op,
                              left=left, right=right)
        return left

    def _try_arrow_ahead(self) -> dict | None:
        """Attempt ``(params) =>`` or ``async (params) =>`` / ``async x =>``
        with full backtracking; returns None when not an arrow."""
        start = self._start()
        is_async = False
        state = self._save()
        if self.at_name("async") and not self._name_is_arrow_head():
            return None
        if self.at_name("async"):
            self._advance()
            if self.tok.nl_before:
                self._restore(state)
                return None
            is_async = True
            if self.tok.kind == "name" and self.tok.value not in _RESERVED:
                param = self.parse_identifier()
                if self.at("=>") and not self.tok.nl_before:
                    return self._finish_arrow(start, [param], is_async)
                self._restore(state)
                return None
        if not self.at("("):
            if is_async:
                self._restore(state)
            return None
        try:
            params = self.parse_params()
            if not self.at("=>") or self.tok.nl_before:
                raise self._error("not an arrow")
        except ParseError:
            self._restore(state)
            return None
        return self._finish_arrow(start, params, is_async)

    def _name_is_arrow_head(self) -> bool:
        if not self.at_name("async"):
            return False
        state = self._save()
        self._advance()
        nxt = self.tok
        ok = (not nxt.nl_before) and (
            (nxt.kind == "punct" and nxt.value == "(")
            or (nxt.kind == "name" and nxt.value not in _RESERVED
                and nxt.value != "function"))
        self._restore(state)
        return ok

    def _finish_arrow(self, start, params, is_async: bool) -> dict:
        self.expect("=>")
        parent_generator = self.fn_stack[-1][1]
        self.fn_stack.append((is_async, parent_generator))
        try:
            if self.at("{"):
                body = self.parse_block()
                is_expression = False
            else:
                body = self.parse_assign()
                is_expression = True
        finally:
            self.fn_stack.pop()
        return self._node("ArrowFunctionExpression", start, id=None,
                          params=params, body=body, generator=False,
                          expression=is_expression, **{"async": is_async})

    def parse_yield(self, start) -> dict:
        self._advance()
        delegate = self.eat("*")
        argument = None
        if not delegate:
            if not (self.tok.nl_before or self.at(")") or self.at("]")
                    or self.at("}") or self.at(",") or self.at(";")
                    or self.at(":") or self.tok.kind == "eof"):
                argument = self.parse_assign()
        else:
            argument = self.parse_assign()
        return self._node("YieldExpression", start, argument=argument,
                          delegate=delegate)

    def parse_conditional(self, no_in: bool = False) -> dict:
        start = self._start()
        test = self.parse_binary(0, no_in)
        if not self.eat("?"):
            return test
        consequent = self.parse_assign()
        self.expect(":")
        alternate = self.parse_assign(no_in=no_in)
        return self._node("ConditionalExpression", start, test=test,
                          consequent=consequent, alternate=alternate)

    def parse_binary(self, min_prec: int, no_in: bool = False) -> dict:
        start = self._start()
        left = self.parse_unary()
        while True:
            if self.tok.kind == "regex" and not self.tok.value.startswith("/="):
                # Regex guessed at operator position: it is division.
                self.tok = self.lexer.relex_divide(self.tok)
            op = None
            if self.tok.kind == "punct" and self.tok.value in _BINARY_PRECEDENCE:
                op = self.tok.value
            elif self.tok.kind == "name" and self.tok.value in ("in", "instanceof"):
                if self.tok.value == "in" and no_in:
                    break
                op = self.tok.value
            if op is None:
                break
            prec = _BINARY_PRECEDENCE[op]
            if prec < min_prec:
                break
            self._advance()
            right = self.parse_binary(prec if op == "**" else prec + 1, no_in)
            type_ = "LogicalExpression" if op in _LOGICAL_OPS else "BinaryExpression"
            left = self._node(type_, start, operator=op, left=left, right=right)
        return left

    def parse_unary(self) -> dict:
        tok = self.tok
        start = self._start()
        if tok.kind == "punct" and tok.value in ("+", "-", "~", "!"):
            self._advance()
            argument = self.parse_unary()
            return self._node("UnaryExpression", start, operator=tok.value,
                              prefix=True, argument=argument)
        if tok.kind == "punct" and tok.value in ("++", "--"):
            self._advance()
            argument = self.parse_unary()
            return self._node("UpdateExpression", start, operator=tok.value,
                              prefix=True, argument=argument)
        if tok.kind == "name":
            if tok.value in ("delete", "void", "typeof"):
                self._advance()
                argument = self.parse_unary()
                return self._node("UnaryExpression", start, operator=tok.value,
                                  prefix=True, argument=argument)
            if tok.value == "await" and self.fn_stack[-1][0]:
                self._advance()
                argument = self.parse_unary()
                return self._node("AwaitExpression", start, argument=argument)
        expr = self.parse_unary_chain()
        if self.tok.kind == "punct" and self.tok.value in ("++", "--") \
                and not self.tok.nl_before:
            op = self._advance().value
            return self._node("UpdateExpression", start, operator=op,
                              prefix=False, argument=expr)
        return expr

    def parse_unary_chain(self) -> dict:
        """Member/call/new chains (LeftHandSideExpression)."""
        start = self._start()
        if self.at_name("new"):
            expr = self.parse_new(start)
        else:
            expr = self.parse_primary()
        return self.parse_chain_tail(expr, start)

    def parse_new(self, start) -> dict:
        self._advance()
        if self.eat("."):
            prop = self.parse_identifier_name()
            meta = self._node("Identifier", start, name="new")
            return self._node("MetaProperty", start, meta=meta, property=prop)
        callee_start = self._start()
        if self.at_name("new"):
            callee = self.parse_new(callee_start)
        else:
            callee = self.parse_primary()
        callee = self.parse_chain_tail(callee, callee_start, allow_call=False)
        arguments = self.parse_arguments() if self.at("(") else []
        return self._node("NewExpression", start, callee=callee,
                          arguments=arguments)

    def parse_chain_tail(self, expr: dict, start, allow_call: bool = True) -> dict:
        while True:
            if self.at("."):
                self._advance()
                prop = self.parse_identifier_name()
                expr = self._node("MemberExpression", start, object=expr,
                                  property=prop, computed=False,
                                  optional=False)
            elif self.at("?."):
                self._advance()
                if self.at("("):
                    if not allow_call:
                        break
                    arguments = self.parse_arguments()
                    expr = self._node("CallExpression", start, callee=expr,
                                      arguments=arguments, optional=True)
                elif self.at("["):
                    self._advance()
                    prop = self.parse_expression()
                    self.expect("]")
                    expr = self._node("MemberExpression", start, object=expr,
                                      property=prop, computed=True,
                                      optional=True)
                else:
                    prop = self.parse_identifier_name()
                    expr = self._node("MemberExpression", start, object=expr,
                                      property=prop, computed=False,
                                      optional=True)
            elif self.at("["):
                self._advance()
                prop = self.parse_expression()
                self.expect("]")
                expr = self._node("MemberExpression", start, object=expr,
                                  property=prop, computed=True, optional=False)
            elif self.at("(") and allow_call:
                arguments = self.parse_arguments()
                expr = self._node("CallExpression", start, callee=expr,
                                  arguments=arguments, optional=False)
            elif self.tok.kind == "template" and self.tok.head:
                quasi = self.parse_template()
                expr = self._node("TaggedTemplateExpression", start, tag=expr,
                                  quasi=quasi)
            else:
                break
        return expr

    def parse_arguments(self) -> list:
        self.expect("(")
        args = []
        while not self.at(")"):
            if self.at("..."):
                spread_start = self._start()
                self._advance()
                argument = self.parse_assign()
                args.append(self._node("SpreadElement", spread_start,
                                       argument=argument))
            else:
                args.append(self.parse_assign())
            if not self.eat(","):
                break
        self.expect(")")
        return args

    def parse_identifier(self) -> dict:
        if self.tok.kind != "name" or self.tok.value in _RESERVED \
                or self.tok.value in _LITERAL_NAMES:
            raise self._error("expected identifier")
        start = self._start()
        return self._node("Identifier", start, name=self._advance().value)

    def parse_identifier_name(self) -> dict:
        """Property names after ``.`` may be any word, including keywords."""
        start = self._start()
        if self.tok.kind == "privatename":
            return self._node("PrivateIdentifier", start,
                              name=self._advance().value[1:])
        if self.tok.kind != "name":
            raise self._error("expected property name")
        return self._node("Identifier", start, name=self._advance().value)

    def parse_literal(self) -> dict:
        start = self._start()
        tok = self._advance()
        if tok.kind == "str":
            return self._node("Literal", start, value=unescape_string(tok.value),
                              raw=tok.value)
        if tok.kind == "num":
            return self._node("Literal", start, value=number_value(tok.value),
                              raw=tok.value)
        raise self._error("expected literal", tok)

    def parse_template(self) -> dict:
        start = self._start()
        quasis = []
        expressions = []
        part = self._advance()  # template head
        quasis.append(self._template_element(part))
        while not part.tail:
            expressions.append(self.parse_expression())
            if not self.at("}"):
                raise self._error("expected '}' in template")
            part = self._continue_template()
            quasis.append(self._template_element(part))
        return self._node("TemplateLiteral", start, quasis=quasis,
                          expressions=expressions)

    def _continue_template(self) -> Token:
        brace = self.tok  # the '}' punct token
        lexer = self.lexer
        lexer.pos = brace.start
        lexer.line = brace.line
        lexer.line_start = brace.start - brace.col
        part = lexer.read_template_part()
        self.prev_end = (part.end_line, part.end_col)
        self.tok = lexer.next_token()
        return part

    def _template_element(self, part: Token) -> dict:
        raw = part.value
        head_trim = 1
        tail_trim = 1 if part.tail else 2
        cooked_raw = raw[head_trim:len(raw) - tail_trim]
        return {
            "type": "TemplateElement",
            "value": {"raw": cooked_raw, "cooked": cooked_raw},
            "tail": part.tail,
            "loc": {
                "start": {"line": part.line, "column": part.col},
                "end": {"line": part.end_line, "column": part.end_col},
            },
        }

    def parse_primary(self) -> dict:
        if self.tok.kind == "punct" and self.tok.value in ("/", "/="):
            # The lexer guessed division; at expression position it must
            # be a regex literal.
            self.tok = self.lexer.relex_regex(self.tok)
        tok = self.tok
        start = self._start()
        if tok.kind == "num" or tok.kind == "str":
            return self.parse_literal()
        if tok.kind == "regex":
            self._advance()
            body, _, flags = tok.value.rpartition("/")
            return self._node("Literal", start, value=None, raw=tok.value,
                              regex={"pattern": body[1:], "flags": flags})
        if tok.kind == "template":
            return self.parse_template()
        if tok.kind == "privatename":
            # `#field in obj` ergonomic brand check
            return self._node("PrivateIdentifier", start,
                              name=self._advance().value[1:])
        if tok.kind == "punct":
            if tok.value == "(":
                self._advance()
                expr = self.parse_expression()
                self.expect(")")
                return expr
            if tok.value == "[":
                return self.parse_array_literal()
            if tok.value == "{":
                return self.parse_object_literal()
        if tok.kind == "name":
            word = tok.value
            if word == "function":
                return self.parse_function(is_declaration=False)
            if word == "async" and self._async_function_ahead():
                return self.parse_function(is_declaration=False)
            if word == "class":
                return self.parse_class(is_declaration=False)
            if word in ("true", "false"):
                self._advance()
                return self._node("Literal", start, value=word == "true",
                                  raw=word)
            if word == "null":
                self._advance()
                return self._node("Literal", start, value=None, raw=word)
            if word == "this":
                self._advance()
                return self._node("ThisExpression", start)
            if word == "super":
                self._advance()
                return self._node("Super", start)
            if word == "import":
                self._advance()
                if self.eat("."):
                    prop = self.parse_identifier_name()
                    meta = self._node("Identifier", start, name="import")
                    return self._node("MetaProperty", start, meta=meta,
                                      property=prop)
                self.expect("(")
                source = self.parse_assign()
                self.eat(",")
                self.expect(")")
                return self._node("ImportExpression", start, source=source)
            if word not in _RESERVED:
                return self.parse_identifier()
        raise self._error("unexpected token")

    def parse_array_literal(self) -> dict:
        start = self._start()
        self.expect("[")
        elements = []
        while not self.at("]"):
            if self.at(","):
                elements.append(None)
                self._advance()
                continue
            if self.at("..."):
                spread_start = self._start()
                self._advance()
                argument = self.parse_assign()
                elements.append(self._node("SpreadElement", spread_start,
                                           argument=argument))
            else:
                elements.append(self.parse_assign())
            if not self.eat(","):
                break
        self.expect("]")
        return self._node("ArrayExpression", start, elements=elements)

    def parse_object_literal(self) -> dict:
        start = self._start()
        self.expect("{")
        properties = []
        while not self.at("}"):
            if self.at("..."):
                spread_start = self._start()
                self._advance()
                argument = self.parse_assign()
                properties.append(self._node("SpreadElement", spread_start,
                                             argument=argument))
            else:
                properties.append(self.parse_object_property())
            if not self.eat(","):
                break
        self.expect("}")
        return self._node("ObjectExpression", start, properties=properties)

    def parse_object_property(self) -> dict:
        start = self._start()
        is_async = False
        is_generator = False
        kind = "init"
        if self.at_name("async") and not self._property_name_is_key_ahead():
            self._advance()
            is_async = True
        if self.at("*"):
            self._advance()
            is_generator = True
        if not is_async and not is_generator \
                and (self.at_name("get") or self.at_name("set")) \
                and not self._property_name_is_key_ahead():
            kind = self._advance().value
        key, computed = self.parse_property_key()
        if self.at("("):
            value = self.parse_method_value(is_async, is_generator)
            if kind == "init":
                return self._node("Property", start, key=key, value=value,
                                  kind="init", method=True, shorthand=False,
                                  computed=computed)
            return self._node("Property", start, key=key, value=value,
                              kind=kind, method=False, shorthand=False,
                              computed=computed)
        if kind != "init" or is_async or is_generator:
            raise self._error("expected method parameters")
        if self.eat(":"):
            value = self.parse_assign()
            return self._node("Property", start, key=key, value=value,
                              kind="init", method=False, shorthand=False,
                              computed=computed)
        if key["type"] != "Identifier":
            raise self._error("expected ':'")
        value = key
        if self.eat("="):
            # CoverInitializedName; valid only when reinterpreted as a
            # destructuring pattern, which _to_pattern handles.
            value = self._node("AssignmentPattern", start, left=key,
                               right=self.parse_assign())
        return self._node("Property", start, key=key, value=value,
                          kind="init", method=False, shorthand=True,
                          computed=False)

    def _property_name_is_key_ahead(self) -> bool:
        """After ``async``/``get``/``set`` in an object literal, decide if the
        word itself is the key (``{get: 1}``, ``{async}``, ``{set(){}}``)."""
        state = self._save()
        self._advance()
        ok = self.at(":") or self.at("(") or self.at(",") or self.at("}") \
            or self.at("=")
        self._restore(state)
        return ok


def _to_pattern(expr: dict, parser: _Parser) -> dict:
    """Reinterpret an expression as an assignment target (destructuring)."""
    type_ = expr["type"]
    if type_ in ("Identifier", "MemberExpression", "ObjectPattern",
                 "ArrayPattern", "AssignmentPattern", "RestElement"):
        return expr
    if type_ == "ObjectExpression":
        expr["type"] = "ObjectPattern"
        for prop in expr["properties"]:
            if prop["type"] == "SpreadElement":
                prop["type"] = "RestElement"
                prop["argument"] = _to_pattern(prop["argument"], parser)
            else:
                prop["value"] = _to_pattern(prop["value"], parser)
        return expr
    if type_ == "ArrayExpression":
        expr["type"] = "ArrayPattern"
        expr["elements"] = [
            None if el is None else _to_pattern(el, parser)
            for el in expr["elements"]
        ]
        return expr
    if type_ == "SpreadElement":
        expr["type"] = "RestElement"
        expr["argument"] = _to_pattern(expr["argument"], parser)
        return expr
    if type_ == "AssignmentExpression" and expr["operator"] == "=":
        expr["type"] = "AssignmentPattern"
        expr["left"] = _to_pattern(expr["left"], parser)
        del expr["operator"]
        return expr
    loc = expr["loc"]["start"]
    raise ParseError("invalid assignment target", loc["line"], loc["column"])
