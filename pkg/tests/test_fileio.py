import json

import pytest

from csseq import (
    NULL,
    ComplementarySet,
    FileFormatError,
    InvariantViolationError,
    MalformedDocumentError,
    MocsFamily,
    QarySequence,
    TagMismatchError,
    concat_cs,
    csv_text,
    emit,
    parse,
    seed_ccc,
    BaseParams,
)


def padded_set():
    return concat_cs(BaseParams(2, 3, 1, mu=[1, 0, 1], mu0=1), 2)


def mutated(doc_text: str, **changes) -> str:
    doc = json.loads(doc_text)
    doc.update(changes)
    return json.dumps(doc)


class TestRoundTrip:
    def test_set_with_nulls(self):
        cs = padded_set()
        assert cs[0].null_count == 2
        again = parse(emit(cs))
        assert isinstance(again, ComplementarySet)
        assert again == cs

    def test_family(self):
        fam = seed_ccc(4)
        again = parse(emit(fam))
        assert isinstance(again, MocsFamily)
        assert again == fam

    def test_emit_is_byte_deterministic(self):
        cs = padded_set()
        text = emit(cs)
        assert emit(parse(text)) == text

    def test_canonical_text(self):
        cs = ComplementarySet([QarySequence(2, [0, NULL, 1])])
        assert emit(cs) == (
            '{"data":[[0,null,1]],"format_tag":"css-set/v1",'
            '"length":3,"q":2,"structure":"set"}\n'
        )

    def test_random_documents_round_trip(self):
        import numpy as np
        rng = np.random.default_rng(99)
        for trial in range(30):
            q = int(rng.choice((2, 3, 4, 8)))
            length = int(rng.integers(1, 30))
            size = int(rng.integers(1, 5))

            def seq():
                vals = rng.integers(0, q, size=length)
                vals[rng.random(length) < 0.3] = NULL
                return QarySequence(q, [int(x) for x in vals])

            if trial % 2 == 0:
                obj = ComplementarySet(seq() for _ in range(size))
            else:
                sets = int(rng.integers(1, 4))
                obj = MocsFamily(
                    ComplementarySet(seq() for _ in range(size))
                    for _ in range(sets)
                )
            assert parse(emit(obj)) == obj

    def test_emit_rejects_other_types(self):
        with pytest.raises(TypeError):
            emit(QarySequence(2, [0, 1]))
        with pytest.raises(TypeError):
            emit([[0, 1]])


class TestMalformed:
    def test_broken_json_reports_position(self):
        with pytest.raises(MalformedDocumentError) as e:
            parse('{"format_tag": ')
        assert e.value.line == 1
        assert e.value.column > 1
        assert "line 1" in str(e.value)

    def test_error_hierarchy(self):
        for cls in (MalformedDocumentError, TagMismatchError,
                    InvariantViolationError):
            assert issubclass(cls, FileFormatError)
        assert issubclass(FileFormatError, ValueError)


class TestTag:
    def test_missing_tag(self):
        with pytest.raises(TagMismatchError, match="no format_tag"):
            parse('{"q": 2}')

    def test_wrong_tag(self):
        text = mutated(emit(seed_ccc(2)), format_tag="css-set/v2")
        with pytest.raises(TagMismatchError, match="css-set/v2"):
            parse(text)


def violation(text: str) -> str:
    with pytest.raises(InvariantViolationError) as e:
        parse(text)
    return e.value.location


class TestInvariants:
    def test_document_must_be_object(self):
        assert violation("[]") == "$"
        assert violation("3") == "$"

    def test_unknown_and_missing_keys(self):
        good = emit(seed_ccc(2))
        assert violation(mutated(good, extra=1)) == "$"
        doc = json.loads(good)
        del doc["length"]
        assert violation(json.dumps(doc)) == "$"

    def test_scalar_fields(self):
        good = emit(seed_ccc(2))
        assert violation(mutated(good, q=True)) == "$.q"
        assert violation(mutated(good, q="2")) == "$.q"
        assert violation(mutated(good, q=0)) == "$.q"
        assert violation(mutated(good, length=0)) == "$.length"
        assert violation(mutated(good, length=2.0)) == "$.length"
        assert violation(mutated(good, structure="family")) == "$.structure"

    def test_data_shape(self):
        good = emit(seed_ccc(2))
        assert violation(mutated(good, data=[])) == "$.data"
        assert violation(mutated(good, data="xy")) == "$.data"

    def test_set_entry_locations(self):
        base = {"format_tag": "css-set/v1", "q": 2, "length": 3,
                "structure": "set"}
        assert violation(json.dumps({**base, "data": [[0, "1", 0]]})) \
            == "$.data[0][1]"
        assert violation(json.dumps({**base, "data": [[0, 1, 2]]})) \
            == "$.data[0][2]"
        assert violation(json.dumps({**base, "data": [[0, 1, -1]]})) \
            == "$.data[0][2]"
        assert violation(json.dumps({**base, "data": [[0, 1, True]]})) \
            == "$.data[0][2]"
        assert violation(json.dumps({**base, "data": [[0, 1]]})) \
            == "$.data[0]"
        assert violation(json.dumps({**base, "data": [[0, 1, 0], []]})) \
            == "$.data[1]"

    def test_family_entry_locations(self):
        base = {"format_tag": "css-set/v1", "q": 2, "length": 2,
                "structure": "mocs"}
        assert violation(json.dumps(
            {**base, "data": [[[0, 0], [0, 5]], [[0, 1], [1, 0]]]}
        )) == "$.data[0][1][1]"
        assert violation(json.dumps(
            {**base, "data": [[[0, 0]], 7]}
        )) == "$.data[1]"
        assert violation(json.dumps(
            {**base, "data": [[[0, 0]], [[0, 1], [1, 0]]]}
        )) == "$.data"

    def test_phase_zero_is_not_null(self):
        # null marks silence; phase 0 is a unit entry and must survive
        cs = parse('{"data":[[0,null]],"format_tag":"css-set/v1",'
                   '"length":2,"q":2,"structure":"set"}')
        seq = cs[0]
        assert seq.values[0] == 0
        assert seq.values[1] == NULL
        assert seq.null_count == 1


class TestCsv:
    def test_quoting_and_terminator(self):
        text = csv_text([["a", "b,c"], [1, 'say "hi"']])
        assert text == 'a,"b,c"\n1,"say ""hi"""\n'
