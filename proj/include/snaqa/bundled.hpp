#pragma once

#include <string>

namespace snaqa {

// Default schema and ruleset compiled into the library; identical copies
// ship as schema/ontosnaqa.schema and rules/ontosnaqa.rules.

inline const std::string& default_schema_text() {
    static const std::string text = std::string(1 + R"__SNAQA_SCHEMA__(
# Default schema: people / questionnaire / network-analysis domains.
# Directives: class <Name> [< <Parent>]
#             prop <name> <asserted|inferred> <DomainClass> <RangeClassOrDatatype>
#             alias <altName> <canonicalName>
# Datatypes: string | int | float | datetime

# ---- people ----------------------------------------------------------------
class Person
class ClassSchoolData
class AcademicCategory < ClassSchoolData
class Course < ClassSchoolData
class CourseLevel < ClassSchoolData
class GroupOfClass < ClassSchoolData
class School < ClassSchoolData
class ClassOnSchool

# ---- questionnaires --------------------------------------------------------
class Questionnaire
class QuestionnairePastEvent
class Question
class QuestionSNA < Question
class Answer
class AnswerSet
class Answer_Label
class AnswerOfPersonToQuestion
class Domain_Class
class Domain_Ontology

# ---- network analysis ------------------------------------------------------
class SNACharacteristic
class SNACaracteristic < SNACharacteristic
class SNACharacteristicValue
class SNACaracteristicValueInteger < SNACharacteristicValue
class SNATypeOfCharacteristic
class SNATypeOfRelation
class SNANetwork
class SNARelation
class SNAIsolate
class SNAIndice
class IndividualBetweenness < SNAIndice
class NetworkBetweenness < SNAIndice
class IndividualCloseness < SNAIndice
class NetworkCloseness < SNAIndice
class IndividualDegree < SNAIndice
class NetworkDegree < SNAIndice
class IndividualInDegree < SNAIndice
class NetworkInDegree < SNAIndice
class IndividualOutDegree < SNAIndice
class NetworkOutDegree < SNAIndice
class IndividualEigenvector < SNAIndice
class NetworkEigenvector < SNAIndice
class DensityOfNetwork < SNAIndice
class NumberOfActors < SNAIndice
class NumberOfActorsInvolvedInARelation < SNAIndice
class NumberOfObjectActors < SNAIndice
class NumberOfRelations < SNAIndice
class NumberOfSubjectActors < SNAIndice

# ---- Person properties -----------------------------------------------------
prop hasAnsweredToQuestion inferred Person Question
prop hasAnsweredToQuestionnairePastEvent inferred Person QuestionnairePastEvent
prop hasCharacteristicOfPerson inferred Person SNACharacteristic
prop hasIndividualBetweenness inferred Person IndividualBetweenness
prop hasIndividualCloseness inferred Person IndividualCloseness
prop hasIndividualDegree inferred Person IndividualDegree
prop hasIndividualEigenvector inferred Person IndividualEigenvector
prop hasIndividualInDegree inferred Person IndividualInDegree
prop hasIndividualOutDegree inferred Person IndividualOutDegree
prop hsIsolateInstanceOfPerson inferred Person SNAIsolate
prop hasRelation inferred Person SNARelation
prop isMemberOf inferred Person SNANetwork
prop isStudentOf inferred Person ClassOnSchool
prop isTargetOfRelation inferred Person SNARelation

# ---- school data -----------------------------------------------------------
prop has_Data_Name asserted ClassSchoolData string
prop isAcademicCategoryOf inferred AcademicCategory ClassOnSchool
prop isCourseOf inferred Course ClassOnSchool
prop isCourseLevelOf inferred CourseLevel ClassOnSchool
prop isGroupOfClassOf inferred GroupOfClass ClassOnSchool
prop isSchoolOf inferred School ClassOnSchool
prop hasAcademicCategory inferred ClassOnSchool AcademicCategory
prop hasCourse inferred ClassOnSchool Course
prop hasCourseLevel inferred ClassOnSchool CourseLevel
prop hasSchool inferred ClassOnSchool School
prop hasStudent inferred ClassOnSchool Person

# ---- questionnaire events --------------------------------------------------
prop has_Date_Start asserted QuestionnairePastEvent datetime
prop has_Date_End asserted QuestionnairePastEvent datetime
prop has_Event_Id asserted QuestionnairePastEvent int
prop hasAnswerOfPersonToQuestion inferred QuestionnairePastEvent AnswerOfPersonToQuestion
prop hasCharacteristicOfQPE inferred QuestionnairePastEvent SNACharacteristic
prop hasNetwork inferred QuestionnairePastEvent SNANetwork
prop hasQuestionnaire inferred QuestionnairePastEvent Questionnaire

# ---- answers ---------------------------------------------------------------
prop isAnsweredByPerson inferred Answer Person
prop has_Number_Of_Answer_Label asserted Answer int
prop hasLabel inferred AnswerOfPersonToQuestion Answer_Label
prop isAnswerOf inferred AnswerOfPersonToQuestion AnswerSet
prop hasAnswered inferred AnswerOfPersonToQuestion Answer_Label
prop hasAnsweredTo inferred AnswerOfPersonToQuestion Question
prop isAnAnswerRelatingTo inferred AnswerOfPersonToQuestion Person
prop isAnswerOfPersonOfCharacteristic inferred AnswerOfPersonToQuestion SNACharacteristic
prop isAnswerOfPersonToQuestionOf inferred AnswerOfPersonToQuestion Person
prop isAnswerOfQuestionnairePastEvent inferred AnswerOfPersonToQuestion QuestionnairePastEvent
prop has_Number_Of_Answers asserted AnswerSet int
prop has_Number_Of_Selected asserted AnswerSet int
prop hasAnswer inferred AnswerSet Answer
prop isAnswerSetOf inferred AnswerSet Question
prop has_Value asserted Answer_Label string
prop isAnswerOfCharacteristicValue inferred Answer_Label SNACharacteristicValue
prop isAnswerOfTypeOfRelation inferred Answer_Label SNATypeOfRelation
prop isLabelOf inferred Answer_Label Answer

# ---- domain catalogue ------------------------------------------------------
prop isDomainClassOf inferred Domain_Class Domain_Ontology
prop has_Domain_IRI asserted Domain_Ontology string
prop has_Domain_Name asserted Domain_Ontology string
prop hasDomainClass inferred Domain_Ontology Domain_Class
prop isDomainOntologyOf inferred Domain_Ontology Question

# ---- questions and questionnaires ------------------------------------------
prop has_Question_Text asserted Question string
prop hasAnswerSet inferred Question AnswerSet
prop hasDomainOntology inferred Question Domain_Ontology
prop hasMergedDomainClass inferred Question Domain_Class
prop isQuestionOf inferred Question Questionnaire
prop isQuestionOfCharacteristicOfPerson inferred Question SNACharacteristic
prop isQuestionOfTypeOfCharacteristic inferred Question SNATypeOfCharacteristic
prop isQuestionOfTypeOfRelation inferred Question SNATypeOfRelation
prop hasQuestion inferred Questionnaire Question
prop isQuestionnaireOf inferred Questionnaire QuestionnairePastEvent

# ---- characteristics -------------------------------------------------------
prop has_Characteristic_Name asserted SNACharacteristic string
prop has_Characteristic_Value asserted SNACharacteristic string
prop hasCharacteristicValue inferred SNACharacteristic SNACharacteristicValue
prop isAnCharacteristicOfPersonOfQuestion inferred SNACharacteristic Question
prop isCharacteristicOfAnswerOfPerson inferred SNACharacteristic AnswerOfPersonToQuestion
prop isCharacteristicOfNetwork inferred SNACharacteristic SNANetwork
prop isCharacteristicOfPerson inferred SNACharacteristic Person
prop isCharacteristicOfQPE inferred SNACharacteristic QuestionnairePastEvent
prop isCharacteristicOfType inferred SNACharacteristic SNATypeOfCharacteristic
prop isCharacteristicValueOf inferred SNACharacteristicValue SNACharacteristic
prop isCharacteristicValueOfAnswer inferred SNACharacteristicValue Answer_Label
prop isPossibleCharacteristicValueOf inferred SNACharacteristicValue SNATypeOfCharacteristic
prop hasPossibleCharacteristicValue inferred SNATypeOfCharacteristic SNACharacteristicValue
prop isCharacteristicOfQuestion inferred SNATypeOfCharacteristic Question
prop isTypeOfCharacteristicOf inferred SNATypeOfCharacteristic SNACharacteristic

# ---- network-analysis indices ----------------------------------------------
prop has_SNA_Value asserted SNAIndice float
prop isIndividualBetweennessOfPerson inferred IndividualBetweenness Person
prop isIndividualBetweennessOfNetwork inferred IndividualBetweenness SNANetwork
prop isNetworkBetweennessOfNetwork inferred NetworkBetweenness SNANetwork
prop isIndividualClosenessOfPerson inferred IndividualCloseness Person
prop isIndividualClosenessOfNetwork inferred IndividualCloseness SNANetwork
prop isNetworkClosenessOfNetwork inferred NetworkCloseness SNANetwork
prop isIndividualInDegreeOfPerson inferred IndividualInDegree Person
prop isIndividualInDegreeOfNetwork inferred IndividualInDegree SNANetwork
prop isNetworkInDegreeOfNetwork inferred NetworkInDegree SNANetwork
prop isIndividualDegreeOfPerson inferred IndividualDegree Person
prop isIndividualDegreeOfNetwork inferred IndividualDegree SNANetwork
prop isNetworkDegreeOfNetwork inferred NetworkDegree SNANetwork
prop isIndividualOutDegreeOfPerson inferred IndividualOutDegree Person
prop isIndividualOutDegreeOfNetwork inferred IndividualOutDegree SNANetwork
prop isNetworkOutDegreeOfNetwork inferred NetworkOutDegree SNANetwork
prop isDensityOfNetworkOf inferred DensityOfNetwork SNANetwork
prop isIndividualEigenvectorOfPerson inferred IndividualEigenvector Person
prop isIndividualEigenvectorOfNetwork inferred IndividualEigenvector SNANetwork
prop isNetworkEigenvectorOf inferred NetworkEigenvector SNANetwork
prop isNumberOfActorsOf inferred NumberOfActors SNANetwork
prop isNumberOfActorsInvolvedInARelationOf inferred NumberOfActorsInvolvedInARelation SNANetwork
prop isNumberOfObjectActorsOf inferred NumberOfObjectActors SNANetwork
prop isNumberOfRelationsOf inferred NumberOfRelations SNANetwork
prop isNumberOfSubjectActorsOf inferred NumberOfSubjectActors SNANetwork

# ---- isolates, networks, relations -----------------------------------------
prop isIsolateInstanceOfNetwork inferred SNAIsolate SNANetwork
prop isIsolateInstanceOfPerson inferred SNAIsolate Person
prop has_Date asserted SNANetwork datetime
prop has_Network_Name asserted SNANetwork string
prop hasCharacteristicOfNetwork inferred SNANetwork SNACharacteristic
prop hasDensityOfNetwork inferred SNANetwork DensityOfNetwork
prop hasIsolateInstanceOfNetwork inferred SNANetwork SNAIsolate
prop hasMember inferred SNANetwork Person
prop hasNetworkBetweenness inferred SNANetwork NetworkBetweenness
prop hasNetworkCloseness inferred SNANetwork NetworkCloseness
prop hasNetworkDegree inferred SNANetwork NetworkDegree
prop hasNetworkEigenvector inferred SNANetwork NetworkEigenvector
prop hasNetworkInDegree inferred SNANetwork NetworkInDegree
prop hasNetworkOutDegree inferred SNANetwork NetworkOutDegree
prop hasNumberOfActors inferred SNANetwork NumberOfActors
prop hasNumberOfActorsInvolvedInARelation inferred SNANetwork NumberOfActorsInvolvedInARelation
prop hasNumberOfObjectActors inferred SNANetwork NumberOfObjectActors
prop hasNumberOfRelations inferred SNANetwork NumberOfRelations
prop hasNumberOfSubjectActors inferred SNANetwork NumberOfSubjectActors
prop hasRelationOfPerson inferred SNANetwork SNARelation
prop isNetworkOfQPE inferred SNANetwork QuestionnairePastEvent
prop isNetworkOfTypeOfRelation inferred SNANetwork SNATypeOfRelation
prop isRelationOfNetwork inferred SNARelation SNANetwork
prop isRelationOfPerson inferred SNARelation Person
prop isRelationOfType inferred SNARelation SNATypeOfRelation
prop isRelationWith inferred SNARelation Person
prop isRelationOfQPE inferred SNARelation QuestionnairePastEvent
prop hasAnswerOfTypeOfRelation inferred SNATypeOfRelation Answer_Label
prop hasQuestionOfTypeOfRelation inferred SNATypeOfRelation Question
prop isTypeOfRelationOfNetwork inferred SNATypeOfRelation SNANetwork
prop isTypeOfRelationOf inferred SNATypeOfRelation SNARelation

# ---- legacy spellings ------------------------------------------------------
alias isAnAnsweringRelatingTo isAnAnswerRelatingTo
alias isRelationOfQpe isRelationOfQPE
alias isTypeOfRleationOfNetwork isTypeOfRelationOfNetwork
alias isIndividualEigenvectorOf isIndividualEigenvectorOfPerson
)__SNAQA_SCHEMA__");
    return text;
}

inline const std::string& default_rules_text() {
    static const std::string text = std::string(1 + R"__SNAQA_RULES__(
# Inference rules for the bundled questionnaire/network schema.
#
# Grammar:  rule := name ":" atoms "->" atoms
#           atoms := atom ("^" atom)*
#           atom  := Ident "(" term ("," term)* ")"
#           term  := "?"Ident | Ident | string | number
# An atom whose name starts with an upper-case letter is a class atom
# (arity 1); lower-case names are property atoms (arity 2). Builtins are
# recognised by name: swrlx:makeOWLThing (output variable first) and
# differentFrom.

Rule-1:
    Person(?p) ^ SNANetwork(?net) ^ AnswerOfPersonToQuestion(?aoptq) ^
    isAnswerOfQuestionnairePastEvent(?aoptq, ?qpe) ^ hasNetwork(?qpe, ?net)
    ->
    hasMember(?net, ?p) ^ hasAnsweredToQuestionnairePastEvent(?p, ?qpe)

Rule-2:
    isAnswerOfTypeOfRelation(?al, ?tor) ^ isTypeOfRelationOfNetwork(?tor, ?net) ^
    swrlx:makeOWLThing(?rel, ?p, ?q) ^ isAnswerOfPersonToQuestionOf(?a, ?p) ^
    Person(?q) ^ isAnswerOfQuestionnairePastEvent(?a, ?qpe) ^ Person(?p) ^
    hasAnswered(?a, ?al) ^ SNANetwork(?net) ^ isNetworkOfQPE(?net, ?qpe) ^
    isAnAnswerRelatingTo(?a, ?q) ^ differentFrom(?p, ?q)
    ->
    isRelationOfType(?rel, ?tor) ^ isRelationOfNetwork(?rel, ?net) ^
    isRelationWith(?rel, ?q) ^ SNARelation(?rel) ^ isRelationOfQPE(?rel, ?qpe) ^
    isRelationOfPerson(?rel, ?p)

Rule-3:
    Person(?p) ^ hasAnsweredToQuestion(?p, ?atoq) ^ hasAnswered(?atoq, ?al) ^
    isAnswerOfCharacteristicValue(?al, ?av) ^ isPossibleCharacteristicValueOf(?av, ?atype) ^
    isAnswerOfQuestionnairePastEvent(?a, ?qpe) ^ hasNetwork(?qpe, ?net) ^
    swrlx:makeOWLThing(?aop, ?av, ?p)
    ->
    SNACharacteristic(?aop) ^ isCharacteristicOfNetwork(?aop, ?net) ^
    isCharacteristicOfPerson(?aop, ?p) ^ isCharacteristicOfQPE(?aop, ?qpe) ^
    isCharacteristicValueOf(?av, ?aop) ^ isCharacteristicOfType(?aop, ?atype)

Rule-4:
    Person(?p) ^ SNACaracteristicValueInteger(?av) ^
    isPossibleCharacteristicValueOf(?av, ?toa) ^ hasMember(?net, ?p) ^
    hasAnsweredToQuestionnairePastEvent(?p, ?qpe) ^ swrlx:makeOWLThing(?aop, ?p, ?av)
    ->
    SNACaracteristic(?aop) ^ isCharacteristicOfType(?aop, ?toa) ^
    isCharacteristicOfPerson(?aop, ?p) ^ isCharacteristicOfNetwork(?aop, ?net) ^
    isCharacteristicOfQPE(?aop, ?qpe)

Rule-5:
    SNACaracteristic(?aop) ^ isCharacteristicOfPerson(?aop, ?p) ^
    isCharacteristicOfType(?aop, ?toa) ^ SNACaracteristicValueInteger(?av) ^
    isPossibleCharacteristicValueOf(?av, ?toa) ^ isCharacteristicOfQuestion(?toa, ?q) ^
    isAnswerOfPersonToQuestionOf(?aoptq, ?p) ^ hasAnsweredTo(?aoptq, ?q)
    ->
    isCharacteristicOfAnswerOfPerson(?aop, ?aoptq)

Rule-6:
    Person(?p) ^ SNANetwork(?net) ^ hasMember(?net, ?p) ^
    swrlx:makeOWLThing(?bw, ?p, ?net) ^ swrlx:makeOWLThing(?cn, ?p, ?net) ^
    swrlx:makeOWLThing(?dg, ?p, ?net) ^ swrlx:makeOWLThing(?in, ?p, ?net) ^
    swrlx:makeOWLThing(?ou, ?p, ?net) ^ swrlx:makeOWLThing(?ei, ?p, ?net)
    ->
    IndividualBetweenness(?bw) ^ isIndividualBetweennessOfPerson(?bw, ?p) ^
    isIndividualBetweennessOfNetwork(?bw, ?net) ^ IndividualCloseness(?cn) ^
    isIndividualClosenessOfPerson(?cn, ?p) ^ isIndividualClosenessOfNetwork(?cn, ?net) ^
    IndividualDegree(?dg) ^ isIndividualDegreeOfPerson(?dg, ?p) ^
    isIndividualDegreeOfNetwork(?dg, ?net) ^ IndividualInDegree(?in) ^
    isIndividualInDegreeOfPerson(?in, ?p) ^ isIndividualInDegreeOfNetwork(?in, ?net) ^
    IndividualOutDegree(?ou) ^ isIndividualOutDegreeOfPerson(?ou, ?p) ^
    isIndividualOutDegreeOfNetwork(?ou, ?net) ^ IndividualEigenvector(?ei) ^
    isIndividualEigenvectorOfPerson(?ei, ?p) ^ isIndividualEigenvectorOfNetwork(?ei, ?net)

Rule-7:
    SNANetwork(?net) ^ isNetworkOfQPE(?net, ?p) ^
    swrlx:makeOWLThing(?bw, ?p, ?net) ^ swrlx:makeOWLThing(?cn, ?p, ?net) ^
    swrlx:makeOWLThing(?dg, ?p, ?net) ^ swrlx:makeOWLThing(?in, ?p, ?net) ^
    swrlx:makeOWLThing(?ou, ?p, ?net) ^ swrlx:makeOWLThing(?ei, ?p, ?net) ^
    swrlx:makeOWLThing(?noa, ?p, ?net) ^ swrlx:makeOWLThing(?noair, ?p, ?net) ^
    swrlx:makeOWLThing(?nooa, ?p, ?net) ^ swrlx:makeOWLThing(?nosa, ?p, ?net) ^
    swrlx:makeOWLThing(?nor, ?p, ?net) ^ swrlx:makeOWLThing(?don, ?p, ?net)
    ->
    NetworkBetweenness(?bw) ^ hasNetworkBetweenness(?net, ?bw) ^
    NetworkCloseness(?cn) ^ hasNetworkCloseness(?net, ?cn) ^
    NetworkDegree(?dg) ^ hasNetworkDegree(?net, ?dg) ^
    NetworkInDegree(?in) ^ hasNetworkInDegree(?net, ?in) ^
    NetworkOutDegree(?ou) ^ hasNetworkOutDegree(?net, ?ou) ^
    NetworkEigenvector(?ei) ^ hasNetworkEigenvector(?net, ?ei) ^
    hasNumberOfActors(?net, ?noa) ^ hasNumberOfSubjectActors(?net, ?nosa) ^
    hasNumberOfObjectActors(?net, ?nooa) ^ hasNumberOfRelations(?net, ?nor) ^
    hasNumberOfActorsInvolvedInARelation(?net, ?noair) ^ hasDensityOfNetwork(?net, ?don)
)__SNAQA_RULES__");
    return text;
}

} // namespace snaqa
