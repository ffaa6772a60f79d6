"""
Reading and writing the JSON file formats.

Algebra, module and counit files go through their pydantic models; every
scalar is written as a canonical "p/q" or integer string.
"""
import json
import logging
import os
from typing import Any, Optional

from pydantic import ValidationError

from app.errors import FieldMismatchError, InputFileNotFoundError, InvalidFormatError
from models.algebras import AlgebraPresentation
from models.files import AlgebraFileModel, CounitFileModel, ModuleFileModel
from models.frobenius import FrobeniusData
from models.linalg import Field, Subspace
from models.modules import ModuleRep
from models.reports import dump_json


def read_json(path: str) -> Any:
    if not os.path.isfile(path):
        raise InputFileNotFoundError(path)
    with open(path, encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidFormatError(f"{path} is not valid JSON: {e}")


def write_json(path: str, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_json(payload) + "\n")


def _validate(model, data: Any, source: str):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InvalidFormatError(f"Malformed {source}: {e.errors()[0]['msg']} at {e.errors()[0]['loc']}")


def parse_algebra(data: Any, field: Optional[Field] = None, name: str = "algebra") -> AlgebraPresentation:
    """
    Build an algebra from its JSON form.

    Raises:
        InvalidFormatError: If the document does not match the algebra format.
        FieldMismatchError: If `field` differs from the field named in the document.
        AxiomViolationError: If the structure constants are not unital and associative.
    """
    model = _validate(AlgebraFileModel, data, "algebra file")
    declared = Field.parse(model.field)
    if field is not None and field != declared:
        raise FieldMismatchError(f"Algebra file is over {declared} but the field {field} was requested.")
    return model.build(name=name, field=declared)


def load_algebra(path: str, field: Optional[Field] = None) -> AlgebraPresentation:
    name = os.path.splitext(os.path.basename(path))[0]
    alg = parse_algebra(read_json(path), field, name)
    logging.info(f"Loaded algebra {name} of dimension {alg.dim} over {alg.field} from {path}")
    return alg


def algebra_to_json(alg: AlgebraPresentation) -> dict:
    return AlgebraFileModel.from_presentation(alg).model_dump(mode="json")


def parse_module(data: Any, field: Field) -> ModuleRep:
    model = _validate(ModuleFileModel, data, "module file")
    return model.build(field)


def load_module(path: str, field: Field) -> ModuleRep:
    return parse_module(read_json(path), field)


def module_to_json(rep: ModuleRep) -> dict:
    return ModuleFileModel.from_rep(rep).model_dump(mode="json")


def parse_counit(data: Any, alg: AlgebraPresentation) -> list:
    """The counit coefficients as field elements; the `symmetric` flag is ignored."""
    model = _validate(CounitFileModel, data, "counit file")
    if len(model.counit) != alg.dim:
        raise InvalidFormatError(f"Counit has {len(model.counit)} coefficients for an algebra of dimension {alg.dim}.")
    return [alg.field.element(c) for c in model.counit]


def load_counit(path: str, alg: AlgebraPresentation) -> list:
    return parse_counit(read_json(path), alg)


def frobenius_to_json(fd: FrobeniusData) -> dict:
    return CounitFileModel.from_frobenius(fd).model_dump(mode="json")


def subspace_to_json(s: Subspace) -> dict:
    """A subspace as its dimension and canonical RREF basis."""
    return {"dim": s.dim, "basis": s.to_strings()}


def vector_to_json(field: Field, v) -> list:
    return [field.to_str(c) for c in v]
