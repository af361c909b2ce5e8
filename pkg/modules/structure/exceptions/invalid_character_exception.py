from modules.util.exceptions.domain_exception import DomainException


class InvalidCharacterException(DomainException):
    pass
