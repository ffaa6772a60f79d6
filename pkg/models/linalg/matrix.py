from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence

from sympy.polys.matrices import DomainMatrix

from app.errors import DimensionMismatchError, FieldMismatchError
from models.linalg.field import Field

Vector = List[Any]


@dataclass(frozen=True, eq=False)
class Matrix:
    """
    Dense exact matrix over a Field, backed by a sympy `DomainMatrix`.

    Vectors are plain lists of field scalars and are treated as columns:
    `m.apply(v)` is the product m·v. Matrices are immutable; every operation
    returns a new value.
    """
    field: Field
    rep: DomainMatrix

    # Construction

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]], cols: int = None) -> "Matrix":
        converted = [[field.element(value) for value in row] for row in rows]
        ncols = len(converted[0]) if converted else (cols or 0)
        if any(len(row) != ncols for row in converted):
            raise DimensionMismatchError("Rows of unequal length.")
        return cls._wrap(field, converted, len(converted), ncols)

    @classmethod
    def _wrap(cls, field: Field, rows: List[List[Any]], nrows: int, ncols: int) -> "Matrix":
        return cls(field, DomainMatrix(rows, (nrows, ncols), field.domain))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls._wrap(field, [[zero] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls._wrap(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Vector], nrows: int) -> "Matrix":
        if any(len(col) != nrows for col in columns):
            raise DimensionMismatchError(f"Columns must have length {nrows}.")
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls._wrap(field, rows, nrows, len(columns))

    @classmethod
    def row_vector(cls, field: Field, vector: Vector) -> "Matrix":
        return cls._wrap(field, [list(vector)], 1, len(vector))

    @classmethod
    def column_vector(cls, field: Field, vector: Vector) -> "Matrix":
        return cls._wrap(field, [[value] for value in vector], len(vector), 1)

    @classmethod
    def hstack(cls, field: Field, blocks: Sequence["Matrix"], nrows: int = None) -> "Matrix":
        if not blocks:
            return cls.zeros(field, nrows or 0, 0)
        height = blocks[0].rows
        if any(block.rows != height for block in blocks):
            raise DimensionMismatchError("hstack of blocks with different row counts.")
        block_rows = [block.to_rows() for block in blocks]
        rows = [sum((rows_of[i] for rows_of in block_rows), []) for i in range(height)]
        return cls._wrap(field, rows, height, sum(block.cols for block in blocks))

    @classmethod
    def vstack(cls, field: Field, blocks: Sequence["Matrix"], ncols: int = None) -> "Matrix":
        if not blocks:
            return cls.zeros(field, 0, ncols or 0)
        width = blocks[0].cols
        if any(block.cols != width for block in blocks):
            raise DimensionMismatchError("vstack of blocks with different column counts.")
        rows = [row for block in blocks for row in block.to_rows()]
        return cls._wrap(field, rows, len(rows), width)

    @classmethod
    def block_diagonal(cls, field: Field, blocks: Sequence["Matrix"]) -> "Matrix":
        nrows = sum(block.rows for block in blocks)
        ncols = sum(block.cols for block in blocks)
        rows = [[field.zero] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block.to_rows()):
                rows[r0 + i][c0:c0 + block.cols] = row
            r0 += block.rows
            c0 += block.cols
        return cls._wrap(field, rows, nrows, ncols)

    # Shape and access

    @property
    def rows(self) -> int:
        return self.rep.shape[0]

    @property
    def cols(self) -> int:
        return self.rep.shape[1]

    @property
    def shape(self):
        return self.rep.shape

    def to_rows(self) -> List[List[Any]]:
        if self.rows == 0:
            return []
        if self.cols == 0:
            return [[] for _ in range(self.rows)]
        return [list(row) for row in self.rep.to_list()]

    def row(self, i: int) -> Vector:
        return self.to_rows()[i]

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        rows = self.to_rows()
        return Matrix._wrap(self.field, [rows[i] for i in indices], len(indices), self.cols)

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.to_rows()]

    def columns(self) -> List[Vector]:
        rows = self.to_rows()
        return [[row[j] for row in rows] for j in range(self.cols)]

    def entry(self, i: int, j: int):
        return self.to_rows()[i][j]

    def flatten(self) -> Vector:
        """Row-major entries: index i·cols + j."""
        return [value for row in self.to_rows() for value in row]

    def is_zero(self) -> bool:
        return all(not value for row in self.to_rows() for value in row)

    # Arithmetic

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"Cannot combine matrices over {self.field} and {other.field}.")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}.")
        if 0 in (self.rows, self.cols, other.cols):
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.rep.matmul(other.rep))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}.")
        if 0 in self.shape:
            return self
        return Matrix(self.field, self.rep + other.rep)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot subtract {other.shape} from {self.shape}.")
        if 0 in self.shape:
            return self
        return Matrix(self.field, self.rep - other.rep)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "Matrix":
        c = self.field.element(c)
        rows = [[c * value for value in row] for row in self.to_rows()]
        return Matrix._wrap(self.field, rows, self.rows, self.cols)

    def transpose(self) -> "Matrix":
        rows = self.to_rows()
        return Matrix._wrap(self.field, [[row[j] for row in rows] for j in range(self.cols)],
                            self.cols, self.rows)

    def apply(self, vector: Vector) -> Vector:
        """Matrix–vector product, the vector read as a column."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for matrix {self.shape}.")
        zero = self.field.zero
        result = []
        for row in self.to_rows():
            total = zero
            for a, b in zip(row, vector):
                if a and b:
                    total += a * b
            result.append(total)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.to_rows() == other.to_rows())

    def to_strings(self) -> List[List[str]]:
        return [[self.field.to_str(value) for value in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_strings()})"


def linear_combination(field: Field, coefficients: Iterable[Any], matrices: Sequence[Matrix],
                       nrows: int, ncols: int) -> Matrix:
    """Σ c_k · matrices[k], skipping zero coefficients."""
    total = Matrix.zeros(field, nrows, ncols)
    for c, m in zip(coefficients, matrices):
        if c:
            total = total + m.scale(c)
    return total
