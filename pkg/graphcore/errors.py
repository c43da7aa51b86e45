"""Опровергнутые утверждения: исход, которого при выполненных условиях быть не может"""


class Falsified(AssertionError):
    """AssertionError со стабильным кодом для отчёта команды"""

    def __init__(self, message, code):
        super().__init__(message)
        self.code = code
