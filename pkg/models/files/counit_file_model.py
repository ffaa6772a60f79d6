from typing import List, Optional, Union

from pydantic import BaseModel

from models.frobenius import FrobeniusData


class CounitFileModel(BaseModel):
    """
    Model of a counit file, stored next to the algebra file.
    """
    counit: List[Union[str, int]]   # ε(e_i) for each basis element
    symmetric: Optional[bool] = None  # Informational; recomputed on load

    @classmethod
    def from_frobenius(cls, fd: FrobeniusData) -> "CounitFileModel":
        return cls(**fd.to_json())
