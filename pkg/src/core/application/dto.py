"""Result records passed from services to the CLI and CSV writers"""

from pydantic import BaseModel, ConfigDict


class DTO(BaseModel):
    """Scalars and strings only; arrays stay inside the domain layer"""
    
    model_config = ConfigDict(validate_assignment=True, use_enum_values=True)
